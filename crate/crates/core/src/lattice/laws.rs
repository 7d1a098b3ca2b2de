//! Exhaustive law checks over raw meet/join tables.

use std::fmt;

use serde::Serialize;

use super::{LatticeError, LatticeTables};

/// The identities a bounded distributive lattice must satisfy.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Law {
    MeetCommutativity,
    JoinCommutativity,
    MeetAssociativity,
    JoinAssociativity,
    Absorption,
    Bounds,
    Distributivity,
}

impl Law {
    pub const ALL: [Law; 7] = [
        Law::MeetCommutativity,
        Law::JoinCommutativity,
        Law::MeetAssociativity,
        Law::JoinAssociativity,
        Law::Absorption,
        Law::Bounds,
        Law::Distributivity,
    ];
}

impl fmt::Display for Law {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            Law::MeetCommutativity => "meet commutativity",
            Law::JoinCommutativity => "join commutativity",
            Law::MeetAssociativity => "meet associativity",
            Law::JoinAssociativity => "join associativity",
            Law::Absorption => "absorption",
            Law::Bounds => "bounds",
            Law::Distributivity => "distributivity",
        };
        f.write_str(name)
    }
}

/// A failed law together with the lexicographically first offending tuple.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LawViolation {
    pub law: Law,
    pub witness: Vec<usize>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct LawReport {
    pub violations: Vec<LawViolation>,
}

impl LawReport {
    pub fn is_empty(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn get(&self, law: Law) -> Option<&LawViolation> {
        self.violations.iter().find(|v| v.law == law)
    }
}

/// Scans every pair and triple of elements. Violations are data; the only
/// error is a table whose shape is wrong.
pub fn validate_laws(tables: &LatticeTables) -> Result<LawReport, LatticeError> {
    tables.check_shape()?;
    let n = tables.meet.len();
    let m = |a: usize, b: usize| tables.meet[a][b];
    let j = |a: usize, b: usize| tables.join[a][b];
    let (bottom, top) = (tables.bottom, tables.top);

    let first_pair = |pred: &dyn Fn(usize, usize) -> bool| {
        (0..n)
            .flat_map(|a| (0..n).map(move |b| (a, b)))
            .find(|&(a, b)| pred(a, b))
            .map(|(a, b)| vec![a, b])
    };
    let first_triple = |pred: &dyn Fn(usize, usize, usize) -> bool| {
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if pred(a, b, c) {
                        return Some(vec![a, b, c]);
                    }
                }
            }
        }
        None
    };

    let mut violations = Vec::new();
    let mut record = |law: Law, witness: Option<Vec<usize>>| {
        if let Some(witness) = witness {
            violations.push(LawViolation { law, witness });
        }
    };

    record(Law::MeetCommutativity, first_pair(&|a, b| m(a, b) != m(b, a)));
    record(Law::JoinCommutativity, first_pair(&|a, b| j(a, b) != j(b, a)));
    record(
        Law::MeetAssociativity,
        first_triple(&|a, b, c| m(a, m(b, c)) != m(m(a, b), c)),
    );
    record(
        Law::JoinAssociativity,
        first_triple(&|a, b, c| j(a, j(b, c)) != j(j(a, b), c)),
    );
    record(
        Law::Absorption,
        first_pair(&|a, b| j(a, m(a, b)) != a || m(a, j(a, b)) != a),
    );
    record(
        Law::Bounds,
        (0..n)
            .find(|&a| m(bottom, a) != bottom || j(top, a) != top)
            .map(|a| vec![a]),
    );
    record(
        Law::Distributivity,
        first_triple(&|a, b, c| {
            m(a, j(b, c)) != j(m(a, b), m(a, c)) || j(a, m(b, c)) != m(j(a, b), j(a, c))
        }),
    );
    Ok(LawReport { violations })
}
