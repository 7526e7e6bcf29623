use std::fmt;

use serde::Serialize;

use super::FiniteRRMonoid;

/// The laws checked by [`FiniteRRMonoid::check_axioms`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Axiom {
    Associativity,
    /// `one` is a two-sided identity.
    Identity,
    /// `zero` is absorbing and a projection.
    Zero,
    /// `star(one) = one`.
    StarOfOne,
    /// `(s*)* = s*`
    RR1,
    /// `(s* t*)* = s* t*`
    RR2,
    /// `s* t* = t* s*`
    RR3,
    /// `s s* = s`
    RR4,
    /// `(st)* = (s* t)*`
    RR5,
    /// `t* s = s (ts)*`
    RR6,
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Axiom::Associativity => "associativity",
            Axiom::Identity => "identity",
            Axiom::Zero => "zero",
            Axiom::StarOfOne => "star-of-one",
            Axiom::RR1 => "RR1",
            Axiom::RR2 => "RR2",
            Axiom::RR3 => "RR3",
            Axiom::RR4 => "RR4",
            Axiom::RR5 => "RR5",
            Axiom::RR6 => "RR6",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub axiom: Axiom,
    /// Element indices that witness the failure, in the order the law
    /// names them.
    pub witness: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AxiomReport {
    pub passed: bool,
    pub violations: Vec<Violation>,
    /// Total number of failing tuples; `violations` keeps at most
    /// [`AxiomReport::MAX_RECORDED`] of them.
    pub violation_count: usize,
}

impl AxiomReport {
    pub const MAX_RECORDED: usize = 64;

    pub fn violated(&self, axiom: Axiom) -> bool {
        self.violations.iter().any(|v| v.axiom == axiom)
    }
}

struct Collector {
    violations: Vec<Violation>,
    count: usize,
}

impl Collector {
    fn push(&mut self, axiom: Axiom, witness: &[usize]) {
        self.count += 1;
        if self.violations.len() < AxiomReport::MAX_RECORDED {
            self.violations.push(Violation {
                axiom,
                witness: witness.to_vec(),
            });
        }
    }
}

impl FiniteRRMonoid {
    /// Exhaustively checks associativity, the monoid laws, and RR1-RR6.
    pub fn check_axioms(&self) -> AxiomReport {
        let n = self.size();
        let one = self.one();
        let mut out = Collector {
            violations: Vec::new(),
            count: 0,
        };

        for a in 0..n {
            if self.mul(one, a) != a || self.mul(a, one) != a {
                out.push(Axiom::Identity, &[a]);
            }
        }
        if self.star(one) != one {
            out.push(Axiom::StarOfOne, &[one]);
        }
        if let Some(z) = self.zero() {
            if self.star(z) != z {
                out.push(Axiom::Zero, &[z]);
            }
            for a in 0..n {
                if self.mul(z, a) != z || self.mul(a, z) != z {
                    out.push(Axiom::Zero, &[a]);
                }
            }
        }

        for a in 0..n {
            for b in 0..n {
                let ab = self.mul(a, b);
                for c in 0..n {
                    if self.mul(ab, c) != self.mul(a, self.mul(b, c)) {
                        out.push(Axiom::Associativity, &[a, b, c]);
                    }
                }
            }
        }

        for s in 0..n {
            let ss = self.star(s);
            if self.star(ss) != ss {
                out.push(Axiom::RR1, &[s]);
            }
            if self.mul(s, ss) != s {
                out.push(Axiom::RR4, &[s]);
            }
            for t in 0..n {
                let ts = self.star(t);
                let p = self.mul(ss, ts);
                if self.star(p) != p {
                    out.push(Axiom::RR2, &[s, t]);
                }
                if p != self.mul(ts, ss) {
                    out.push(Axiom::RR3, &[s, t]);
                }
                if self.star(self.mul(s, t)) != self.star(self.mul(ss, t)) {
                    out.push(Axiom::RR5, &[s, t]);
                }
                if self.mul(ts, s) != self.mul(s, self.star(self.mul(t, s))) {
                    out.push(Axiom::RR6, &[s, t]);
                }
            }
        }

        AxiomReport {
            passed: out.count == 0,
            violations: out.violations,
            violation_count: out.count,
        }
    }
}
