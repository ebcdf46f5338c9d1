//! Structure classes and the classifier.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::table::OpTable;

/// Labels for the axiom systems a table can satisfy.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum StructureClass {
    Ilo,
    Latin,
    Symmetric,
    Involutive,
    Slominski,
    HyperSlominski,
    Subtraction,
    Hypersubtraction,
    Prequandle,
    Quandle,
    Autonomous,
    GroupDerived,
}

impl StructureClass {
    pub const ALL: [StructureClass; 12] = [
        StructureClass::Ilo,
        StructureClass::Latin,
        StructureClass::Symmetric,
        StructureClass::Involutive,
        StructureClass::Slominski,
        StructureClass::HyperSlominski,
        StructureClass::Subtraction,
        StructureClass::Hypersubtraction,
        StructureClass::Prequandle,
        StructureClass::Quandle,
        StructureClass::Autonomous,
        StructureClass::GroupDerived,
    ];

    /// Classes whose definition involves a distinguished unit.
    pub fn is_pointed(self) -> bool {
        matches!(
            self,
            StructureClass::Slominski
                | StructureClass::HyperSlominski
                | StructureClass::Subtraction
                | StructureClass::Hypersubtraction
                | StructureClass::GroupDerived
        )
    }

    /// Every class except `Subtraction` requires invertible column maps.
    pub fn requires_ilo(self) -> bool {
        self != StructureClass::Subtraction
    }

    pub fn name(self) -> &'static str {
        match self {
            StructureClass::Ilo => "Ilo",
            StructureClass::Latin => "Latin",
            StructureClass::Symmetric => "Symmetric",
            StructureClass::Involutive => "Involutive",
            StructureClass::Slominski => "Slominski",
            StructureClass::HyperSlominski => "HyperSlominski",
            StructureClass::Subtraction => "Subtraction",
            StructureClass::Hypersubtraction => "Hypersubtraction",
            StructureClass::Prequandle => "Prequandle",
            StructureClass::Quandle => "Quandle",
            StructureClass::Autonomous => "Autonomous",
            StructureClass::GroupDerived => "GroupDerived",
        }
    }
}

impl fmt::Display for StructureClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for StructureClass {
    type Err = Error;

    /// Case-insensitive; `-` and `_` are ignored, so `hyper-slominski`
    /// parses as `HyperSlominski`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let key: String = s
            .chars()
            .filter(|c| *c != '-' && *c != '_')
            .flat_map(char::to_lowercase)
            .collect();
        StructureClass::ALL
            .into_iter()
            .find(|c| c.name().to_lowercase() == key)
            .ok_or_else(|| Error::Format(format!("unknown structure class `{s}`")))
    }
}

pub type ClassSet = BTreeSet<StructureClass>;

/// Right self-distributivity `(x.y).z = (x.z).(y.z)`.
pub fn is_right_distributive(op: &OpTable) -> bool {
    let n = op.order();
    (0..n).all(|x| {
        (0..n).all(|y| {
            (0..n).all(|z| op.get(op.get(x, y), z) == op.get(op.get(x, z), op.get(y, z)))
        })
    })
}

/// `(x.x').(y.y') = (x.y).(x'.y')`.
pub fn is_medial(op: &OpTable) -> bool {
    let n = op.order();
    for x in 0..n {
        for xp in 0..n {
            let xxp = op.get(x, xp);
            for y in 0..n {
                let xy = op.get(x, y);
                for yp in 0..n {
                    if op.get(xxp, op.get(y, yp)) != op.get(xy, op.get(xp, yp)) {
                        return false;
                    }
                }
            }
        }
    }
    true
}

/// The adjoint `x o y = t` where `d(t, x) = y`, if every column map of `d`
/// is a permutation.
pub(crate) fn try_adjoint(d: &OpTable) -> Option<OpTable> {
    let n = d.order();
    let mut cells = vec![usize::MAX; n * n];
    for x in 0..n {
        for t in 0..n {
            let y = d.get(t, x);
            if cells[x * n + y] != usize::MAX {
                return None;
            }
            cells[x * n + y] = t;
        }
    }
    Some(OpTable::from_cells(n, cells))
}

/// Classifies `d` against every axiom system. When `unit` is `None` and the
/// diagonal of `d` is constant, its value serves as the unit for the
/// pointed classes.
pub fn classify(d: &OpTable, unit: Option<usize>) -> ClassSet {
    use StructureClass::*;

    let n = d.order();
    let mut flags = ClassSet::new();
    let unit = unit.or_else(|| d.constant_diagonal()).filter(|&u| u < n);
    let pointed = unit.filter(|&u| (0..n).all(|x| d.get(x, x) == u));
    let subtraction = pointed.is_some_and(|u| (0..n).all(|x| d.get(x, u) == x));
    if subtraction {
        flags.insert(Subtraction);
    }

    let Some(adjoint) = try_adjoint(d) else {
        return flags;
    };
    flags.insert(Ilo);
    if d.rows_are_permutations() {
        flags.insert(Latin);
    }
    if adjoint.is_commutative() {
        flags.insert(Symmetric);
    }
    if (0..n).all(|x| (0..n).all(|y| adjoint.get(x, y) == d.get(y, x))) {
        flags.insert(Involutive);
    }
    if pointed.is_some() {
        // Injective column maps on a finite carrier are bijective, so the
        // two Slominski classes coincide here.
        flags.insert(Slominski);
        flags.insert(HyperSlominski);
        if subtraction {
            flags.insert(Hypersubtraction);
            if adjoint.is_associative() {
                flags.insert(GroupDerived);
            }
        }
    }
    if d.is_idempotent() {
        flags.insert(Prequandle);
        if is_right_distributive(d) {
            flags.insert(Quandle);
        }
        if is_medial(d) {
            flags.insert(Autonomous);
        }
    }
    flags
}

/// Returns the first implication of the class lattice that `flags` violates.
pub fn lattice_violation(flags: &ClassSet, order: usize) -> Option<&'static str> {
    use StructureClass::*;
    let has = |c| flags.contains(&c);
    let rules: [(bool, &'static str); 8] = [
        (!has(Hypersubtraction) || has(HyperSlominski), "Hypersubtraction => HyperSlominski"),
        (!has(HyperSlominski) || has(Slominski), "HyperSlominski => Slominski"),
        (!has(Slominski) || has(HyperSlominski), "finite Slominski => HyperSlominski"),
        (!has(Quandle) || has(Prequandle), "Quandle => Prequandle"),
        (!has(Autonomous) || has(Quandle), "Autonomous => Quandle"),
        (!has(Symmetric) || has(Latin), "Symmetric => Latin"),
        (!(has(Slominski) && has(Prequandle)) || order == 1, "Slominski & Prequandle => singleton"),
        (!has(GroupDerived) || has(Hypersubtraction), "GroupDerived => Hypersubtraction"),
    ];
    rules.into_iter().find(|(ok, _)| !ok).map(|(_, name)| name)
}

#[cfg(test)]
mod tests {
    use super::*;
    use StructureClass::*;

    fn set(items: &[StructureClass]) -> ClassSet {
        items.iter().copied().collect()
    }

    #[test]
    fn z2_table_gets_every_group_class() {
        let d = OpTable::from_fn(2, |x, y| (x + y) % 2);
        assert_eq!(
            classify(&d, None),
            set(&[
                Ilo,
                Latin,
                Symmetric,
                Involutive,
                Slominski,
                HyperSlominski,
                Subtraction,
                Hypersubtraction,
                GroupDerived
            ])
        );
    }

    #[test]
    fn trivial_quandle_of_order_three() {
        let d = OpTable::from_fn(3, |x, _| x);
        // x o y = y = d(y, x), so projections are involutive as well
        assert_eq!(
            classify(&d, None),
            set(&[Ilo, Involutive, Prequandle, Quandle, Autonomous])
        );
    }

    #[test]
    fn bare_subtraction_is_not_ilo() {
        let d = OpTable::from_rows(vec![vec![0, 0, 0], vec![1, 0, 0], vec![2, 0, 0]]).unwrap();
        // column 1 is constant
        assert_eq!(d.column(1), vec![0, 0, 0]);
        assert_eq!(classify(&d, None), set(&[Subtraction]));
    }

    #[test]
    fn explicit_unit_off_the_diagonal_blocks_pointed_classes() {
        let d = OpTable::from_fn(3, |x, y| (3 + x - y) % 3);
        let flags = classify(&d, Some(1));
        assert!(flags.contains(&Ilo));
        assert!(!flags.contains(&Slominski));
    }

    #[test]
    fn parses_class_names_loosely() {
        assert_eq!("quandle".parse::<StructureClass>().unwrap(), Quandle);
        assert_eq!("hyper-slominski".parse::<StructureClass>().unwrap(), HyperSlominski);
        assert_eq!("GROUP_DERIVED".parse::<StructureClass>().unwrap(), GroupDerived);
        assert!("rack".parse::<StructureClass>().is_err());
    }

    #[test]
    fn singleton_is_in_every_class() {
        let d = OpTable::from_fn(1, |_, _| 0);
        assert_eq!(classify(&d, None), StructureClass::ALL.into_iter().collect());
    }
}
