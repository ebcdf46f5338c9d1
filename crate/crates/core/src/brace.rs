//! Digroups, left skew braces, and the two hyperindexes of a split
//! epimorphism of skew braces.

use crate::error::{Error, Result};
use crate::group::{find_unit, FiniteGroup};
use crate::points::{split_epi, IndexWitness, SplitEpi, Structure};
use crate::table::OpTable;

/// Two group laws `*` and `o` on one carrier with a common unit.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Digroup {
    star: FiniteGroup,
    circ: FiniteGroup,
}

impl Digroup {
    pub fn from_tables(star: OpTable, circ: OpTable) -> Result<Self> {
        if star.order() != circ.order() {
            return Err(Error::MapLength {
                expected: star.order(),
                got: circ.order(),
            });
        }
        let us = find_unit(&star).ok_or(Error::NotGroup("no two-sided unit"))?;
        let uc = find_unit(&circ).ok_or(Error::NotGroup("no two-sided unit"))?;
        if us != uc {
            return Err(Error::UnitMismatch { left: us, right: uc });
        }
        Ok(Digroup {
            star: FiniteGroup::with_unit(star, us)?,
            circ: FiniteGroup::with_unit(circ, uc)?,
        })
    }

    pub fn from_groups(star: FiniteGroup, circ: FiniteGroup) -> Result<Self> {
        Digroup::from_tables(star.mult().clone(), circ.mult().clone())
    }

    pub fn order(&self) -> usize {
        self.star.order()
    }

    pub fn unit(&self) -> usize {
        self.star.unit()
    }

    pub fn star(&self) -> &FiniteGroup {
        &self.star
    }

    pub fn circ(&self) -> &FiniteGroup {
        &self.circ
    }
}

/// First `(a, b, c)` with `a o (b * c) != (a o b) * a^-* * (a o c)`.
pub fn skew_brace_violation(d: &Digroup) -> Option<(usize, usize, usize)> {
    let (s, c) = (&d.star, &d.circ);
    let n = d.order();
    for a in 0..n {
        let a_inv = s.inv(a);
        for b in 0..n {
            let ab = c.op(a, b);
            for x in 0..n {
                let lhs = c.op(a, s.op(b, x));
                if lhs != s.op(s.op(ab, a_inv), c.op(a, x)) {
                    return Some((a, b, x));
                }
            }
        }
    }
    None
}

pub fn is_skew_brace(d: &Digroup) -> bool {
    skew_brace_violation(d).is_none()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SkewBrace {
    digroup: Digroup,
}

impl SkewBrace {
    pub fn new(digroup: Digroup) -> Result<Self> {
        match skew_brace_violation(&digroup) {
            Some((a, b, c)) => Err(Error::NotSkewBrace(a, b, c)),
            None => Ok(SkewBrace { digroup }),
        }
    }

    /// `(G, *, *)`.
    pub fn trivial(g: &FiniteGroup) -> SkewBrace {
        SkewBrace {
            digroup: Digroup {
                star: g.clone(),
                circ: g.clone(),
            },
        }
    }

    pub fn digroup(&self) -> &Digroup {
        &self.digroup
    }

    pub fn star(&self) -> &FiniteGroup {
        &self.digroup.star
    }

    pub fn circ(&self) -> &FiniteGroup {
        &self.digroup.circ
    }
}

/// `(G, *, *op)` with `a o b = b * a`.
pub fn opposite_brace(g: &FiniteGroup) -> SkewBrace {
    SkewBrace::new(Digroup {
        star: g.clone(),
        circ: g.opposite(),
    })
    .expect("the opposite law always gives a skew brace")
}

impl Structure for SkewBrace {
    fn order(&self) -> usize {
        self.digroup.order()
    }

    fn unit(&self) -> Option<usize> {
        Some(self.digroup.unit())
    }

    fn operations(&self) -> Vec<&OpTable> {
        vec![self.star().mult(), self.circ().mult()]
    }
}

/// A split epimorphism of skew braces; `f` and `s` must preserve both laws.
pub fn brace_split_epi(
    total: SkewBrace,
    base: SkewBrace,
    f: Vec<usize>,
    s: Vec<usize>,
) -> Result<SplitEpi<SkewBrace>> {
    split_epi(total, base, f, s).map_err(|e| match e {
        Error::NotHomomorphism(..) => Error::NotBihomomorphism,
        other => other,
    })
}

/// The split epimorphism of opposite braces carried by a group split
/// epimorphism.
pub fn opposite_split_epi(e: &SplitEpi<FiniteGroup>) -> SplitEpi<SkewBrace> {
    brace_split_epi(
        opposite_brace(e.total()),
        opposite_brace(e.base()),
        e.f().to_vec(),
        e.s().to_vec(),
    )
    .expect("group homomorphisms preserve opposite laws")
}

/// `gamma_*(x) = s(f(x))^-* * x` and `gamma_o(x) = s(f(x))^-o o x`.
pub fn brace_indexes(e: &SplitEpi<SkewBrace>) -> (IndexWitness, IndexWitness) {
    let witness = |g: &FiniteGroup| {
        let raw: Vec<usize> = (0..g.order()).map(|x| g.op(g.inv(e.s()[e.f()[x]]), x)).collect();
        let w = IndexWitness::evaluate(e, &raw, |y, k| g.op(e.s()[y], k))
            .expect("both laws share the kernel");
        assert!(w.is_hyperindex, "each law gives a hyperindex");
        w
    };
    (witness(e.total().star()), witness(e.total().circ()))
}
