//! Exhaustive enumeration of labeled tables in a structure class.
//!
//! Tables are filled cell by cell in row-major order with ascending values,
//! so the stream comes out in lexicographic table order. Column (and, for
//! latin classes, row) distinctness, forced cells and partial identity
//! checks prune the search; every emitted table is then confirmed by
//! [`classify`].

use crate::classes::{classify, ClassSet, StructureClass};
use crate::error::{Error, Result};
use crate::iso::is_canonical;
use crate::model::IloModel;
use crate::table::OpTable;

/// What to enumerate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EnumerationRequest {
    pub order: usize,
    pub class: StructureClass,
    pub up_to_iso: bool,
    /// `(shard index, shard count)`.
    pub partition: Option<(usize, usize)>,
    /// Further classes every emitted table must belong to.
    pub also: Vec<StructureClass>,
    /// Overrides [`default_max_order`].
    pub max_order: Option<usize>,
}

impl EnumerationRequest {
    pub fn new(order: usize, class: StructureClass) -> Self {
        EnumerationRequest {
            order,
            class,
            up_to_iso: false,
            partition: None,
            also: Vec::new(),
            max_order: None,
        }
    }

    pub fn up_to_iso(mut self) -> Self {
        self.up_to_iso = true;
        self
    }

    pub fn shard(mut self, index: usize, count: usize) -> Self {
        self.partition = Some((index, count));
        self
    }

    pub fn also(mut self, class: StructureClass) -> Self {
        self.also.push(class);
        self
    }

    pub fn with_max_order(mut self, max: usize) -> Self {
        self.max_order = Some(max);
        self
    }

    fn classes(&self) -> impl Iterator<Item = StructureClass> + '_ {
        std::iter::once(self.class).chain(self.also.iter().copied())
    }

    fn validate(&self) -> Result<()> {
        if self.order == 0 {
            return Err(Error::EmptyCarrier);
        }
        let max = self.max_order.unwrap_or_else(|| default_max_order(self.class));
        if self.order > max {
            return Err(Error::OrderTooLarge {
                order: self.order,
                max,
            });
        }
        if let Some((index, count)) = self.partition {
            if index >= count {
                return Err(Error::BadShard { index, count });
            }
        }
        Ok(())
    }
}

/// Default order cap: 6 for the quandle family, 5 otherwise.
pub fn default_max_order(class: StructureClass) -> usize {
    match class {
        StructureClass::Prequandle | StructureClass::Quandle | StructureClass::Autonomous => 6,
        _ => 5,
    }
}

/// One table from the stream with its classification.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EnumeratedTable {
    pub d: OpTable,
    pub unit: Option<usize>,
    pub flags: ClassSet,
}

impl EnumeratedTable {
    pub fn into_model(self) -> Result<IloModel> {
        IloModel::build(self.d, self.unit)
    }
}

/// Streams every table of the requested class, including the non-ILO class
/// `Subtraction`.
pub fn enumerate_tables(req: &EnumerationRequest) -> Result<TableStream> {
    req.validate()?;
    let n = req.order;
    let pointed = req.classes().any(StructureClass::is_pointed);
    let ilo = req.classes().any(StructureClass::requires_ilo);
    let latin = req
        .classes()
        .any(|c| matches!(c, StructureClass::Latin | StructureClass::Symmetric));
    let idempotent = req.classes().any(|c| {
        matches!(
            c,
            StructureClass::Prequandle | StructureClass::Quandle | StructureClass::Autonomous
        )
    });
    let subtraction = req.classes().any(|c| {
        matches!(
            c,
            StructureClass::Subtraction
                | StructureClass::Hypersubtraction
                | StructureClass::GroupDerived
        )
    });

    let mut forced = vec![None; n * n];
    for x in 0..n {
        if pointed {
            forced[x * n + x] = Some(0);
        }
        if idempotent {
            forced[x * n + x] = Some(x);
        }
        if subtraction {
            forced[x * n] = Some(x);
        }
    }
    // a unit on the diagonal and idempotency only meet at order 1
    let contradictory = pointed && idempotent && n > 1;
    let mut checks = Vec::new();
    if req.classes().any(|c| c == StructureClass::Quandle) {
        checks.push(PartialCheck::RightDistributive);
    }
    if req.classes().any(|c| c == StructureClass::Autonomous) {
        checks.push(PartialCheck::Medial);
    }

    let mut search = CellSearch::new(n, forced, ilo, latin, checks, req.partition);
    if contradictory || (subtraction && pointed && search.forced_conflict()) {
        search.done = true;
    }
    Ok(TableStream {
        search,
        unit: pointed.then_some(0),
        required: req.classes().collect(),
        up_to_iso: req.up_to_iso,
    })
}

/// Streams [`IloModel`]s of an ILO class.
pub fn enumerate(req: &EnumerationRequest) -> Result<impl Iterator<Item = IloModel>> {
    if let Some(bad) = req.classes().find(|c| !c.requires_ilo()) {
        if !req.classes().any(StructureClass::requires_ilo) {
            return Err(Error::NotIloClass(bad));
        }
    }
    Ok(enumerate_tables(req)?.map(|t| t.into_model().expect("ILO classes yield ILO tables")))
}

/// Iterator returned by [`enumerate_tables`].
pub struct TableStream {
    search: CellSearch,
    unit: Option<usize>,
    required: Vec<StructureClass>,
    up_to_iso: bool,
}

impl Iterator for TableStream {
    type Item = EnumeratedTable;

    fn next(&mut self) -> Option<EnumeratedTable> {
        loop {
            let d = self.search.next_table()?;
            let flags = classify(&d, self.unit);
            if !self.required.iter().all(|c| flags.contains(c)) {
                continue;
            }
            if self.up_to_iso && !is_canonical(&d, self.unit.or_else(|| d.constant_diagonal())) {
                continue;
            }
            return Some(EnumeratedTable {
                d,
                unit: self.unit,
                flags,
            });
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum PartialCheck {
    RightDistributive,
    Medial,
}

const UNSET: usize = usize::MAX;

/// Row-major backtracking over partial tables.
struct CellSearch {
    n: usize,
    cells: Vec<usize>,
    forced: Vec<Option<usize>>,
    distinct_columns: bool,
    distinct_rows: bool,
    col_used: Vec<u64>,
    row_used: Vec<u64>,
    checks: Vec<PartialCheck>,
    shard: Option<(usize, usize)>,
    prefixes_seen: usize,
    pos: usize,
    started: bool,
    done: bool,
}

impl CellSearch {
    fn new(
        n: usize,
        forced: Vec<Option<usize>>,
        distinct_columns: bool,
        distinct_rows: bool,
        checks: Vec<PartialCheck>,
        shard: Option<(usize, usize)>,
    ) -> Self {
        assert!(n <= 64, "bitmask search supports order at most 64");
        CellSearch {
            n,
            cells: vec![UNSET; n * n],
            forced,
            distinct_columns,
            distinct_rows,
            col_used: vec![0; n],
            row_used: vec![0; n],
            checks,
            shard,
            prefixes_seen: 0,
            pos: 0,
            started: false,
            done: false,
        }
    }

    /// Forced cells that already violate distinctness.
    fn forced_conflict(&self) -> bool {
        let n = self.n;
        for col in 0..n {
            let mut used = 0u64;
            for row in 0..n {
                if let Some(v) = self.forced[row * n + col] {
                    if self.distinct_columns && used & (1 << v) != 0 {
                        return true;
                    }
                    used |= 1 << v;
                }
            }
        }
        false
    }

    fn next_table(&mut self) -> Option<OpTable> {
        if self.done {
            return None;
        }
        let total = self.n * self.n;
        if self.started {
            self.pos = total - 1;
        } else {
            self.started = true;
            self.pos = 0;
        }
        loop {
            if self.advance(self.pos) {
                if self.pos + 1 == total {
                    return Some(OpTable::from_cells(self.n, self.cells.clone()));
                }
                self.pos += 1;
            } else if self.pos == 0 {
                self.done = true;
                return None;
            } else {
                self.pos -= 1;
            }
        }
    }

    fn assign(&mut self, pos: usize, v: usize) {
        let (row, col) = (pos / self.n, pos % self.n);
        self.cells[pos] = v;
        self.col_used[col] |= 1 << v;
        self.row_used[row] |= 1 << v;
    }

    fn unassign(&mut self, pos: usize) {
        let v = self.cells[pos];
        if v == UNSET {
            return;
        }
        let (row, col) = (pos / self.n, pos % self.n);
        self.cells[pos] = UNSET;
        self.col_used[col] &= !(1 << v);
        self.row_used[row] &= !(1 << v);
    }

    /// Moves cell `pos` to its next admissible value; leaves it unset and
    /// returns `false` when none is left.
    fn advance(&mut self, pos: usize) -> bool {
        let prev = self.cells[pos];
        self.unassign(pos);
        let start = if prev == UNSET { 0 } else { prev + 1 };
        let (row, col) = (pos / self.n, pos % self.n);
        for v in start..self.n {
            if self.forced[pos].is_some_and(|f| f != v) {
                continue;
            }
            if self.distinct_columns && self.col_used[col] & (1 << v) != 0 {
                continue;
            }
            if self.distinct_rows && self.row_used[row] & (1 << v) != 0 {
                continue;
            }
            self.assign(pos, v);
            if self.partial_ok() && self.shard_ok(pos) {
                return true;
            }
            self.unassign(pos);
        }
        false
    }

    /// Shards split the search on the first row: the `k`-th admissible
    /// first-row prefix belongs to shard `k mod count`.
    fn shard_ok(&mut self, pos: usize) -> bool {
        let Some((index, count)) = self.shard else {
            return true;
        };
        if pos + 1 != self.n {
            return true;
        }
        let k = self.prefixes_seen;
        self.prefixes_seen += 1;
        k % count == index
    }

    fn get(&self, a: usize, b: usize) -> Option<usize> {
        let v = self.cells[a * self.n + b];
        (v != UNSET).then_some(v)
    }

    fn partial_ok(&self) -> bool {
        self.checks.iter().all(|check| match check {
            PartialCheck::RightDistributive => self.distributive_ok(),
            PartialCheck::Medial => self.medial_ok(),
        })
    }

    fn distributive_ok(&self) -> bool {
        let n = self.n;
        for x in 0..n {
            for y in 0..n {
                let Some(xy) = self.get(x, y) else { continue };
                for z in 0..n {
                    let lhs = self.get(xy, z);
                    let rhs = match (self.get(x, z), self.get(y, z)) {
                        (Some(xz), Some(yz)) => self.get(xz, yz),
                        _ => None,
                    };
                    if let (Some(l), Some(r)) = (lhs, rhs) {
                        if l != r {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }

    fn medial_ok(&self) -> bool {
        let n = self.n;
        for x in 0..n {
            for xp in 0..n {
                let Some(a) = self.get(x, xp) else { continue };
                for y in 0..n {
                    let Some(c) = self.get(x, y) else { continue };
                    for yp in 0..n {
                        let lhs = self.get(y, yp).and_then(|b| self.get(a, b));
                        let rhs = self.get(xp, yp).and_then(|e| self.get(c, e));
                        if let (Some(l), Some(r)) = (lhs, rhs) {
                            if l != r {
                                return false;
                            }
                        }
                    }
                }
            }
        }
        true
    }
}
