use std::fmt;
use std::str::FromStr;

use crate::asm::ChainedAsm;
use crate::error::{Error, Result};
use crate::placements::{ChainMatching, OneLine};
use crate::views::{from_fpl, from_ice, from_monotone_triangles, to_fpl, to_ice, to_monotone_triangles};

use super::document::Document;

/// The descriptions a chained permutation or chained ASM can be converted
/// between.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Form {
    Matrix,
    OneLine,
    Matching,
    Asm,
    Mt,
    Ice,
    Fpl,
}

impl Form {
    pub const ALL: [Form; 7] = [
        Form::Matrix,
        Form::OneLine,
        Form::Matching,
        Form::Asm,
        Form::Mt,
        Form::Ice,
        Form::Fpl,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Form::Matrix => "matrix",
            Form::OneLine => "oneline",
            Form::Matching => "matching",
            Form::Asm => "asm",
            Form::Mt => "mt",
            Form::Ice => "ice",
            Form::Fpl => "fpl",
        }
    }

    /// The form a document is in, if it is one of the convertible ones.
    pub fn of(doc: &Document) -> Option<Form> {
        Some(match doc {
            Document::Permutation(_) => Form::Matrix,
            Document::OneLine(_) => Form::OneLine,
            Document::Matching(_) => Form::Matching,
            Document::Asm(_) => Form::Asm,
            Document::Triangles(_) => Form::Mt,
            Document::Ice(_) => Form::Ice,
            Document::Fpl(_) => Form::Fpl,
            _ => return None,
        })
    }
}

impl fmt::Display for Form {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Form {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Form::ALL
            .into_iter()
            .find(|f| f.as_str() == s)
            .ok_or_else(|| Error::Domain(format!("unknown form \"{s}\"")))
    }
}

/// Reads any convertible document as a chained ASM.
pub fn to_hub(doc: &Document) -> Result<ChainedAsm> {
    match doc {
        Document::Permutation(p) => Ok(ChainedAsm::from_permutation(p)),
        Document::OneLine(o) => Ok(ChainedAsm::from_permutation(&o.to_permutation()?)),
        Document::Matching(m) => Ok(ChainedAsm::from_permutation(&m.to_permutation()?)),
        Document::Asm(a) => {
            a.validate().into_result()?;
            Ok(a.clone())
        }
        Document::Triangles(t) => from_monotone_triangles(t),
        Document::Ice(c) => from_ice(c),
        Document::Fpl(f) => from_ice(&from_fpl(f)?),
        other => Err(Error::Unsupported(format!("{} documents cannot be converted", other.family()))),
    }
}

/// The matrix, one-line and matching forms need an ASM without -1
/// entries; the other three need a circular board with even `k`.
pub fn from_hub(a: &ChainedAsm, to: Form) -> Result<Document> {
    Ok(match to {
        Form::Matrix => a.to_permutation()?.into(),
        Form::OneLine => OneLine::from_permutation(&a.to_permutation()?).into(),
        Form::Matching => ChainMatching::from_permutation(&a.to_permutation()?).into(),
        Form::Asm => a.clone().into(),
        Form::Mt => to_monotone_triangles(a)?.into(),
        Form::Ice => to_ice(a)?.into(),
        Form::Fpl => to_fpl(&to_ice(a)?)?.into(),
    })
}

/// Validates `doc`, then goes through the chained ASM it describes.
pub fn convert(doc: &Document, to: Form) -> Result<Document> {
    doc.validate().into_result()?;
    from_hub(&to_hub(doc)?, to)
}
