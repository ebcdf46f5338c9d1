//! JSON documents, tagged by `"kind"`.

use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::brace::{Digroup, SkewBrace};
use crate::classes::{classify, StructureClass};
use crate::constructions::AlexanderDatum;
use crate::error::{Error, Result};
use crate::group::FiniteGroup;
use crate::internal::InternalOpDatum;
use crate::model::IloModel;
use crate::points::{split_epi, SplitEpi};
use crate::relations::ReflexiveRelation;
use crate::table::OpTable;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Document {
    Ilo(ModelDoc),
    Magma(ModelDoc),
    Group(GroupDoc),
    Alexander(AlexanderDoc),
    SplitEpi(SplitEpiDoc),
    Relation(RelationDoc),
    Internal(InternalDoc),
    Brace(BraceDoc),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ModelDoc {
    pub order: usize,
    pub d: OpTable,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub unit: Option<usize>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub flags: Vec<StructureClass>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupDoc {
    pub order: usize,
    pub mult: OpTable,
    pub unit: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlexanderDoc {
    pub group: GroupDoc,
    pub f: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SplitEpiDoc {
    pub total: Box<Document>,
    pub base: Box<Document>,
    pub f: Vec<usize>,
    pub s: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RelationDoc {
    pub base: ModelDoc,
    pub pairs: Vec<(usize, usize)>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InternalDoc {
    pub ambient: GroupDoc,
    pub op: OpTable,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BraceDoc {
    pub order: usize,
    pub star: OpTable,
    pub circ: OpTable,
    pub unit: usize,
}

fn check_order(declared: usize, table: &OpTable) -> Result<()> {
    if declared == table.order() {
        Ok(())
    } else {
        Err(Error::Format(format!(
            "declared order {declared} but the table has {} rows",
            table.order()
        )))
    }
}

impl FromStr for Document {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| Error::Format(e.to_string()))
    }
}

impl Document {
    /// Compact single-line JSON.
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("documents serialize")
    }

    pub fn kind(&self) -> &'static str {
        match self {
            Document::Ilo(_) => "ilo",
            Document::Magma(_) => "magma",
            Document::Group(_) => "group",
            Document::Alexander(_) => "alexander",
            Document::SplitEpi(_) => "split-epi",
            Document::Relation(_) => "relation",
            Document::Internal(_) => "internal",
            Document::Brace(_) => "brace",
        }
    }

    /// The binary table and unit that classification applies to.
    pub fn classifiable(&self) -> Result<(OpTable, Option<usize>)> {
        match self {
            Document::Ilo(m) | Document::Magma(m) => {
                check_order(m.order, &m.d)?;
                Ok((m.d.clone(), m.unit))
            }
            Document::Group(g) => {
                let model = crate::constructions::from_group(&g.to_group()?);
                Ok((model.d().clone(), model.unit()))
            }
            Document::Alexander(a) => Ok((crate::constructions::alexander(&a.to_datum()?).d().clone(), None)),
            Document::Internal(i) => Ok((i.to_datum()?.op().clone(), None)),
            other => Err(Error::Format(format!("cannot classify a `{}` document", other.kind()))),
        }
    }
}

impl ModelDoc {
    pub fn from_model(m: &IloModel) -> ModelDoc {
        ModelDoc {
            order: m.order(),
            d: m.d().clone(),
            unit: m.unit(),
            flags: m.flags().iter().copied().collect(),
        }
    }

    pub fn from_table(d: OpTable, unit: Option<usize>) -> ModelDoc {
        ModelDoc {
            order: d.order(),
            flags: classify(&d, unit).into_iter().collect(),
            d,
            unit,
        }
    }

    /// The model exactly as labeled; listed flags must match the classifier.
    pub fn to_model(&self) -> Result<IloModel> {
        check_order(self.order, &self.d)?;
        if let Some(u) = self.unit {
            crate::table::check_element(self.order, u)?;
        }
        let model = IloModel::build(self.d.clone(), self.unit)?;
        let claimed: Vec<StructureClass> = self.flags.clone();
        if !claimed.is_empty() && claimed.iter().any(|c| !model.has(*c)) {
            return Err(Error::Format("listed flags do not match the table".into()));
        }
        Ok(model)
    }
}

impl GroupDoc {
    pub fn from_group(g: &FiniteGroup) -> GroupDoc {
        GroupDoc {
            order: g.order(),
            mult: g.mult().clone(),
            unit: g.unit(),
        }
    }

    pub fn to_group(&self) -> Result<FiniteGroup> {
        check_order(self.order, &self.mult)?;
        crate::table::check_element(self.order, self.unit)?;
        FiniteGroup::with_unit(self.mult.clone(), self.unit)
    }
}

impl AlexanderDoc {
    pub fn to_datum(&self) -> Result<AlexanderDatum> {
        AlexanderDatum::new(self.group.to_group()?, self.f.clone())
    }
}

impl RelationDoc {
    pub fn to_relation(&self) -> Result<ReflexiveRelation> {
        ReflexiveRelation::new(self.base.to_model()?, self.pairs.iter().copied())
    }
}

impl InternalDoc {
    pub fn to_datum(&self) -> Result<InternalOpDatum> {
        InternalOpDatum::new(self.ambient.to_group()?, self.op.clone())
    }
}

impl BraceDoc {
    pub fn from_brace(b: &SkewBrace) -> BraceDoc {
        BraceDoc {
            order: b.digroup().order(),
            star: b.star().mult().clone(),
            circ: b.circ().mult().clone(),
            unit: b.digroup().unit(),
        }
    }

    pub fn to_brace(&self) -> Result<SkewBrace> {
        check_order(self.order, &self.star)?;
        let digroup = Digroup::from_tables(self.star.clone(), self.circ.clone())?;
        if digroup.unit() != self.unit {
            return Err(Error::UnitMismatch {
                left: self.unit,
                right: digroup.unit(),
            });
        }
        SkewBrace::new(digroup)
    }
}

/// A split epimorphism read from a document, typed by its carriers.
#[derive(Debug, Clone)]
pub enum AnySplitEpi {
    Group(SplitEpi<FiniteGroup>),
    Model(SplitEpi<IloModel>),
    Brace(SplitEpi<SkewBrace>),
}

impl SplitEpiDoc {
    pub fn to_split_epi(&self) -> Result<AnySplitEpi> {
        let (f, s) = (self.f.clone(), self.s.clone());
        match (&*self.total, &*self.base) {
            (Document::Group(t), Document::Group(b)) => {
                Ok(AnySplitEpi::Group(split_epi(t.to_group()?, b.to_group()?, f, s)?))
            }
            (Document::Ilo(t), Document::Ilo(b)) => {
                Ok(AnySplitEpi::Model(split_epi(t.to_model()?, b.to_model()?, f, s)?))
            }
            (Document::Brace(t), Document::Brace(b)) => Ok(AnySplitEpi::Brace(
                crate::brace::brace_split_epi(t.to_brace()?, b.to_brace()?, f, s)?,
            )),
            (t, b) => Err(Error::Format(format!(
                "split epimorphism between `{}` and `{}` documents",
                t.kind(),
                b.kind()
            ))),
        }
    }
}
