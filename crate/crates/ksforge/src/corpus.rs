//! The golden corpus: every MMP string printed in the source material for the
//! 60-75 class, with the properties each set is documented to have.
//!
//! These strings are data, not examples — the regression suite and the
//! `verify-corpus` CLI verb check every entry against its expected shape,
//! colorability, criticality, loop order, and parity verdict.

/// Expected properties of one corpus set.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CorpusEntry {
    pub name: &'static str,
    pub mmp: &'static str,
    pub vertex_count: usize,
    pub block_count: usize,
    /// Documented maximal loop order, if any.
    pub max_loop_order: Option<usize>,
    pub critical: bool,
    /// Whether the odd-blocks / even-degrees parity argument applies.
    pub parity_holds: bool,
}

pub const SET_26_13: &str =
    "1234,4567,789A,ABCD,DEFG,GHIJ,JKLM,MNO1,5CHO,3Q8I,6QKF,NP9E,2PLB.";

pub const SET_30_15A: &str =
    "1234,4567,789A,ABCD,DEFG,GHIJ,JKLM,MNOP,PQRS,STU1,5FKU,2CHR,38IN,9EOT,6BLQ.";

pub const SET_30_15B: &str =
    "1234,4567,789A,ABCD,DEFG,GHIJ,JKLM,MNOP,PQRS,STU1,6ELT,8FKR,C5UN,O29H,B3QI.";

pub const SET_30_15C: &str =
    "1234,4567,789A,ABCD,DEFG,GHIJ,JKLM,MNO1,2PCL,3TSI,5PUT,6QRH,8KRF,9NSE,BQUO.";

pub const SET_32_17: &str =
    "1234,4567,789A,ABCD,DEFG,GHIJ,JKLM,MNOP,PQR1,2SCK,3VIO,3WE8,3LTB,5SGR,6WUH,9TGN,FUVQ.";

pub const SET_33_17A: &str =
    "1234,4567,789A,ABCD,DEFG,GHIJ,JKLM,MNOP,PQRS,STU1,K2VF,3BIN,R5CH,Q6WL,U8OH,9TXE,VWXH.";

pub const SET_33_17B: &str =
    "1234,4567,789A,ABCD,DEFG,GHIJ,JKLM,MNOP,PQR1,O2XW,K3UV,IR5C,LQ6B,8SWF,9TVE,BTSN,BUXH.";

pub const SET_34_17A: &str =
    "1234,4567,789A,ABCD,DEFG,GHIJ,JKLM,MNOP,PQRS,STU1,2VIQ,3NYE,5RKF,6WOB,TW8L,9XVU,CXYH.";

pub const SET_34_17B: &str =
    "1234,4567,789A,ABCD,DEFG,GHIJ,JKLM,MNOP,PQRS,STU1,2XHO,3CYR,5VKT,6BIN,8FWU,9ELQ,VWXY.";

pub const SET_34_17C: &str =
    "1234,4567,789A,ABCD,DEFG,GHIJ,JKLM,MNOP,PQRS,STU1,2WIN,3XHC,5FKU,6RVB,8YTO,9ELQ,VWXY.";

pub const SET_34_17D: &str =
    "1234,4567,789A,ABCD,DEFG,GHIJ,JKLM,MNOP,PQR1,O2T9,NS38,5UCH,6YBI,ELVQ,FKXR,XWUT,VSWY.";

pub const SET_34_17E: &str =
    "1234,4567,789A,ABCD,DEFG,GHIJ,JKLM,MNOP,PQRS,STU1,2VXI,3WYH,5FKU,6BOT,8VWR,9ELQ,CXYN.";

pub const SET_42_24: &str =
    "1234,5678,9ABC,DEF8,GHIJ,KLMJ,NOPQ,RSTM,UVI4,WXYF,ZaE3,bcLC,dTHB,eaYQ,ecVD,fbPG,gUSO,\
     gfeA,ZTN7,XU97,bWR2,dWO6,fK63,eJ72.";

pub const SET_60_75: &str =
    "1234,1cKT,1Qtg,1Njo,1yYE,2Mmn,2vZD,2Pri,2bIV,3HWe,3kqO,3XGx,3shS,4Fwa,4UdJ,4fRu,4pLl,\
     5678,5pSK,5XiN,5buE,5Wwm,9ABC,9fxK,9sVN,9PlE,9qdZ,AUOt,AHiy,Abao,AGRm,BFSj,BXnc,BvJg,\
     BWLr,CpeY,CkDQ,CMuT,ChwI,6Fet,6kVy,6PJo,6hLZ,7Uxj,7sDc,7Mag,7qRI,8fOY,8HnQ,8vlT,8Gdr,\
     FGDE,FqiT,UhnE,UWVT,fhig,fWDo,pGVg,pqno,HIJK,HZuj,kraK,kmlj,XIlt,XZaY,srut,smJY,MLON,\
     MdSy,vReN,vwxy,PRSQ,PwOc,bLxQ,bdec.";

/// The critical sets of the corpus plus the 60-75 parent, in listing order.
pub const ALL: &[CorpusEntry] = &[
    CorpusEntry {
        name: "26-13",
        mmp: SET_26_13,
        vertex_count: 26,
        block_count: 13,
        max_loop_order: Some(8),
        critical: true,
        parity_holds: true,
    },
    CorpusEntry {
        name: "30-15a",
        mmp: SET_30_15A,
        vertex_count: 30,
        block_count: 15,
        max_loop_order: Some(10),
        critical: true,
        parity_holds: true,
    },
    CorpusEntry {
        name: "30-15b",
        mmp: SET_30_15B,
        vertex_count: 30,
        block_count: 15,
        max_loop_order: Some(10),
        critical: true,
        parity_holds: true,
    },
    CorpusEntry {
        name: "30-15c",
        mmp: SET_30_15C,
        vertex_count: 30,
        block_count: 15,
        max_loop_order: Some(8),
        critical: true,
        parity_holds: true,
    },
    CorpusEntry {
        name: "32-17",
        mmp: SET_32_17,
        vertex_count: 32,
        block_count: 17,
        max_loop_order: Some(9),
        critical: true,
        parity_holds: true,
    },
    CorpusEntry {
        name: "33-17a",
        mmp: SET_33_17A,
        vertex_count: 33,
        block_count: 17,
        max_loop_order: Some(10),
        critical: true,
        parity_holds: true,
    },
    CorpusEntry {
        name: "33-17b",
        mmp: SET_33_17B,
        vertex_count: 33,
        block_count: 17,
        max_loop_order: Some(9),
        critical: true,
        parity_holds: true,
    },
    CorpusEntry {
        name: "34-17a",
        mmp: SET_34_17A,
        vertex_count: 34,
        block_count: 17,
        max_loop_order: Some(10),
        critical: true,
        parity_holds: true,
    },
    CorpusEntry {
        name: "34-17b",
        mmp: SET_34_17B,
        vertex_count: 34,
        block_count: 17,
        max_loop_order: Some(10),
        critical: true,
        parity_holds: true,
    },
    CorpusEntry {
        name: "34-17c",
        mmp: SET_34_17C,
        vertex_count: 34,
        block_count: 17,
        max_loop_order: Some(10),
        critical: true,
        parity_holds: true,
    },
    CorpusEntry {
        name: "34-17d",
        mmp: SET_34_17D,
        vertex_count: 34,
        block_count: 17,
        max_loop_order: Some(9),
        critical: true,
        parity_holds: true,
    },
    CorpusEntry {
        name: "34-17e",
        mmp: SET_34_17E,
        vertex_count: 34,
        block_count: 17,
        max_loop_order: Some(10),
        critical: true,
        parity_holds: true,
    },
    CorpusEntry {
        name: "42-24",
        mmp: SET_42_24,
        vertex_count: 42,
        block_count: 24,
        max_loop_order: Some(14),
        critical: true,
        parity_holds: false,
    },
    CorpusEntry {
        name: "60-75",
        mmp: SET_60_75,
        vertex_count: 60,
        block_count: 75,
        max_loop_order: None,
        critical: false,
        parity_holds: false,
    },
];

/// The critical sets only (every entry except the 60-75 parent).
pub fn critical_sets() -> impl Iterator<Item = &'static CorpusEntry> {
    ALL.iter().filter(|e| e.critical)
}

pub fn by_name(name: &str) -> Option<&'static CorpusEntry> {
    ALL.iter().find(|e| e.name == name)
}
