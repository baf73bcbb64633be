use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde_json::{json, Map, Value};

use crate::asm::{ChainedAsm, PlainAsm};
use crate::board::{BoardSpec, Composition, Shape, Square};
use crate::error::{Error, Result, Validation};
use crate::matrix::Matrix;
use crate::placements::{ChainEdge, ChainMatching, ChainedPermutation, OneLine, RookPlacement};
use crate::views::{FplConfiguration, GridEdge, GridVertex, IceConfiguration, MonotoneTriangleChain};

use super::json::{locate, parse_value, to_canonical_string};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    Placement,
    ChainedPermutation,
    OneLine,
    Matching,
    ChainedAsm,
    PlainAsm,
    MonotoneTriangles,
    Ice,
    Fpl,
    Composition,
}

impl Family {
    pub const ALL: [Family; 10] = [
        Family::Placement,
        Family::ChainedPermutation,
        Family::OneLine,
        Family::Matching,
        Family::ChainedAsm,
        Family::PlainAsm,
        Family::MonotoneTriangles,
        Family::Ice,
        Family::Fpl,
        Family::Composition,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Family::Placement => "placement",
            Family::ChainedPermutation => "chained-permutation",
            Family::OneLine => "one-line",
            Family::Matching => "matching",
            Family::ChainedAsm => "chained-asm",
            Family::PlainAsm => "plain-asm",
            Family::MonotoneTriangles => "monotone-triangles",
            Family::Ice => "ice",
            Family::Fpl => "fpl",
            Family::Composition => "composition",
        }
    }

    /// The key holding the object itself.
    fn payload_key(self) -> &'static str {
        match self {
            Family::Placement => "rooks",
            Family::ChainedPermutation | Family::ChainedAsm => "matrices",
            Family::OneLine => "one_line",
            Family::Matching | Family::Fpl => "edges",
            Family::PlainAsm => "matrix",
            Family::MonotoneTriangles => "triangles",
            Family::Ice => "heads",
            Family::Composition => "parts",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Family::ALL
            .into_iter()
            .find(|f| f.as_str() == s)
            .ok_or_else(|| Error::Domain(format!("unknown family \"{s}\"")))
    }
}

/// Any object that has a text form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Document {
    Placement(RookPlacement),
    Permutation(ChainedPermutation),
    OneLine(OneLine),
    Matching(ChainMatching),
    Asm(ChainedAsm),
    PlainAsm(PlainAsm),
    Triangles(MonotoneTriangleChain),
    Ice(IceConfiguration),
    Fpl(FplConfiguration),
    Composition(BoardSpec, Composition),
}

impl Document {
    pub fn family(&self) -> Family {
        match self {
            Document::Placement(_) => Family::Placement,
            Document::Permutation(_) => Family::ChainedPermutation,
            Document::OneLine(_) => Family::OneLine,
            Document::Matching(_) => Family::Matching,
            Document::Asm(_) => Family::ChainedAsm,
            Document::PlainAsm(_) => Family::PlainAsm,
            Document::Triangles(_) => Family::MonotoneTriangles,
            Document::Ice(_) => Family::Ice,
            Document::Fpl(_) => Family::Fpl,
            Document::Composition(..) => Family::Composition,
        }
    }

    /// `None` for a plain ASM, which lives on no chained board.
    pub fn board(&self) -> Option<BoardSpec> {
        Some(*match self {
            Document::Placement(x) => x.board(),
            Document::Permutation(x) => x.board(),
            Document::OneLine(x) => x.board(),
            Document::Matching(x) => x.board(),
            Document::Asm(x) => x.board(),
            Document::PlainAsm(_) => return None,
            Document::Triangles(x) => x.board(),
            Document::Ice(x) => x.board(),
            Document::Fpl(x) => x.board(),
            Document::Composition(b, _) => b,
        })
    }

    /// The family's own validator. For compositions this is admissibility.
    pub fn validate(&self) -> Validation {
        match self {
            Document::Placement(x) => x.validate(),
            Document::Permutation(x) => x.validate(),
            Document::OneLine(x) => x.validate(),
            Document::Matching(x) => x.validate(),
            Document::Asm(x) => x.validate(),
            Document::PlainAsm(x) => x.validate(),
            Document::Triangles(x) => x.validate(),
            Document::Ice(x) => x.validate(),
            Document::Fpl(x) => x.validate(),
            Document::Composition(b, c) => {
                let mut v = Validation::ok();
                if !c.is_admissible(b) {
                    v.push(format!("{c} is not admissible on {b}"));
                }
                v
            }
        }
    }

    pub fn to_value(&self) -> Value {
        let mut map = Map::new();
        map.insert("family".into(), json!(self.family().as_str()));
        match self.board() {
            Some(b) => {
                map.insert("shape".into(), json!(b.shape().as_str()));
                map.insert("n".into(), json!(b.n()));
                map.insert("k".into(), json!(b.k()));
            }
            None => {
                let Document::PlainAsm(a) = self else { unreachable!() };
                map.insert("n".into(), json!(a.size()));
            }
        }
        let payload = match self {
            Document::Placement(p) => p.squares().iter().map(|s| json!([s.board, s.row, s.col])).collect(),
            Document::Permutation(x) => matrices_value(x.matrices()),
            Document::OneLine(x) => json!(x.to_string()),
            Document::Matching(x) => x.edges().iter().map(|e| json!(e.to_string())).collect(),
            Document::Asm(x) => matrices_value(x.matrices()),
            Document::PlainAsm(x) => matrix_value(x.matrix()),
            Document::Triangles(x) => json!(x.triangles()),
            Document::Ice(x) => Value::Object(
                x.heads()
                    .iter()
                    .map(|(e, h)| (e.to_string(), json!(h.to_string())))
                    .collect(),
            ),
            Document::Fpl(x) => x.edges().iter().map(|e| json!(e.to_string())).collect(),
            Document::Composition(_, c) => json!(c.parts()),
        };
        map.insert(self.family().payload_key().into(), payload);
        Value::Object(map)
    }

    /// The canonical text form.
    pub fn serialize(&self) -> String {
        to_canonical_string(&self.to_value())
    }

    /// Reads any JSON layout of a document. Only structure is checked here:
    /// a document that parses may still fail [`Document::validate`].
    pub fn deserialize(text: &str) -> Result<Self> {
        let value = parse_value(text)?;
        let r = Reader { text, value: &value };
        r.document()
    }
}

impl fmt::Display for Document {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.serialize())
    }
}

pub fn serialize(doc: &Document) -> String {
    doc.serialize()
}

pub fn deserialize(text: &str) -> Result<Document> {
    Document::deserialize(text)
}

fn matrix_value(m: &Matrix) -> Value {
    m.rows().into_iter().map(|r| json!(r)).collect()
}

fn matrices_value(ms: &[Matrix]) -> Value {
    ms.iter().map(matrix_value).collect()
}

struct Reader<'a> {
    text: &'a str,
    value: &'a Value,
}

impl Reader<'_> {
    fn err(&self, key: &str, message: impl Into<String>) -> Error {
        let (line, column) = locate(self.text, key);
        Error::Parse {
            line,
            column,
            message: message.into(),
        }
    }

    fn field(&self, key: &str) -> Result<&Value> {
        self.value
            .get(key)
            .ok_or_else(|| self.err(key, format!("missing field \"{key}\"")))
    }

    fn string(&self, key: &str) -> Result<&str> {
        self.field(key)?
            .as_str()
            .ok_or_else(|| self.err(key, format!("\"{key}\" must be a string")))
    }

    fn number(&self, key: &str, v: &Value) -> Result<usize> {
        v.as_u64()
            .and_then(|x| usize::try_from(x).ok())
            .ok_or_else(|| self.err(key, format!("\"{key}\" needs non-negative integers, found {v}")))
    }

    fn array<'v>(&self, key: &str, v: &'v Value) -> Result<&'v Vec<Value>> {
        v.as_array()
            .ok_or_else(|| self.err(key, format!("\"{key}\" needs an array, found {v}")))
    }

    fn numbers(&self, key: &str, v: &Value) -> Result<Vec<usize>> {
        self.array(key, v)?.iter().map(|x| self.number(key, x)).collect()
    }

    fn matrix(&self, key: &str, v: &Value) -> Result<Matrix> {
        let rows = self
            .array(key, v)?
            .iter()
            .map(|row| {
                self.array(key, row)?
                    .iter()
                    .map(|x| {
                        x.as_i64()
                            .and_then(|x| i8::try_from(x).ok())
                            .ok_or_else(|| self.err(key, format!("matrix entry {x} is not a small integer")))
                    })
                    .collect::<Result<Vec<i8>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Matrix::from_rows(&rows).map_err(|e| self.err(key, e.to_string()))
    }

    fn matrices(&self, key: &str) -> Result<Vec<Matrix>> {
        self.array(key, self.field(key)?)?
            .iter()
            .map(|m| self.matrix(key, m))
            .collect()
    }

    fn strings(&self, key: &str) -> Result<Vec<&str>> {
        self.array(key, self.field(key)?)?
            .iter()
            .map(|x| {
                x.as_str()
                    .ok_or_else(|| self.err(key, format!("\"{key}\" needs strings, found {x}")))
            })
            .collect()
    }

    fn check_keys(&self, family: Family, chained: bool) -> Result<()> {
        let obj = self
            .value
            .as_object()
            .ok_or_else(|| Error::Parse {
                line: 1,
                column: 1,
                message: "a document must be a JSON object".into(),
            })?;
        let mut allowed = vec!["family", "n", family.payload_key()];
        if chained {
            allowed.extend(["shape", "k"]);
        }
        if let Some(extra) = obj.keys().find(|key| !allowed.contains(&key.as_str())) {
            return Err(self.err(extra, format!("unexpected field \"{extra}\" in a {family} document")));
        }
        Ok(())
    }

    fn document(&self) -> Result<Document> {
        if !self.value.is_object() {
            return Err(Error::Parse {
                line: 1,
                column: 1,
                message: "a document must be a JSON object".into(),
            });
        }
        let family: Family = self
            .string("family")?
            .parse()
            .map_err(|e: Error| self.err("family", e.to_string()))?;
        let key = family.payload_key();
        let n = self.number("n", self.field("n")?)?;
        if family == Family::PlainAsm {
            self.check_keys(family, false)?;
            let m = self.matrix(key, self.field(key)?)?;
            if m.size() != n {
                return Err(self.err("n", format!("n is {n} but the matrix has side {}", m.size())));
            }
            return Ok(Document::PlainAsm(PlainAsm::new_unchecked(m)));
        }
        self.check_keys(family, true)?;
        let shape: Shape = self
            .string("shape")?
            .parse()
            .map_err(|e: Error| self.err("shape", e.to_string()))?;
        let k = self.number("k", self.field("k")?)?;
        let board = BoardSpec::new(shape, n, k)?;
        let wrap = |e: Error| match e {
            Error::Parse { .. } => e,
            other => self.err(key, other.to_string()),
        };
        Ok(match family {
            Family::Placement => {
                let squares = self
                    .array(key, self.field(key)?)?
                    .iter()
                    .map(|t| match self.numbers(key, t)?[..] {
                        [b, r, c] => Ok(Square::new(b, r, c)),
                        _ => Err(self.err(key, format!("a rook is [board, row, col], found {t}"))),
                    })
                    .collect::<Result<Vec<_>>>()?;
                Document::Placement(RookPlacement::new(board, squares).map_err(wrap)?)
            }
            Family::ChainedPermutation => Document::Permutation(
                ChainedPermutation::new_unchecked(board, self.matrices(key)?).map_err(wrap)?,
            ),
            Family::ChainedAsm => {
                Document::Asm(ChainedAsm::new_unchecked(board, self.matrices(key)?).map_err(wrap)?)
            }
            Family::OneLine => Document::OneLine(OneLine::parse_for(&board, self.string(key)?).map_err(wrap)?),
            Family::Matching => {
                let edges = self
                    .strings(key)?
                    .into_iter()
                    .map(|s| s.parse::<ChainEdge>().map_err(wrap))
                    .collect::<Result<Vec<_>>>()?;
                Document::Matching(ChainMatching::new_unchecked(board, edges).map_err(wrap)?)
            }
            Family::MonotoneTriangles => {
                let tris = self
                    .array(key, self.field(key)?)?
                    .iter()
                    .map(|t| {
                        self.array(key, t)?
                            .iter()
                            .map(|row| self.numbers(key, row))
                            .collect::<Result<Vec<_>>>()
                    })
                    .collect::<Result<Vec<_>>>()?;
                Document::Triangles(MonotoneTriangleChain::new(board, tris).map_err(wrap)?)
            }
            Family::Ice => {
                let obj = self
                    .field(key)?
                    .as_object()
                    .ok_or_else(|| self.err(key, "\"heads\" must map edge ids to vertex ids"))?;
                let mut heads = BTreeMap::new();
                for (e, h) in obj {
                    let e: GridEdge = e.parse().map_err(wrap)?;
                    let h: GridVertex = h
                        .as_str()
                        .ok_or_else(|| self.err(key, format!("head of {e} must be a string")))?
                        .parse()
                        .map_err(wrap)?;
                    heads.insert(e, h);
                }
                Document::Ice(IceConfiguration::new(board, heads).map_err(wrap)?)
            }
            Family::Fpl => {
                let edges = self
                    .strings(key)?
                    .into_iter()
                    .map(|s| s.parse::<GridEdge>().map_err(wrap))
                    .collect::<Result<_>>()?;
                Document::Fpl(FplConfiguration::new(board, edges).map_err(wrap)?)
            }
            Family::Composition => {
                let parts = self.numbers(key, self.field(key)?)?;
                if parts.len() != k {
                    return Err(self.err(key, format!("{} parts for k = {k}", parts.len())));
                }
                Document::Composition(board, Composition(parts))
            }
            Family::PlainAsm => unreachable!(),
        })
    }
}

impl From<RookPlacement> for Document {
    fn from(x: RookPlacement) -> Self {
        Document::Placement(x)
    }
}

impl From<ChainedPermutation> for Document {
    fn from(x: ChainedPermutation) -> Self {
        Document::Permutation(x)
    }
}

impl From<OneLine> for Document {
    fn from(x: OneLine) -> Self {
        Document::OneLine(x)
    }
}

impl From<ChainMatching> for Document {
    fn from(x: ChainMatching) -> Self {
        Document::Matching(x)
    }
}

impl From<ChainedAsm> for Document {
    fn from(x: ChainedAsm) -> Self {
        Document::Asm(x)
    }
}

impl From<PlainAsm> for Document {
    fn from(x: PlainAsm) -> Self {
        Document::PlainAsm(x)
    }
}

impl From<MonotoneTriangleChain> for Document {
    fn from(x: MonotoneTriangleChain) -> Self {
        Document::Triangles(x)
    }
}

impl From<IceConfiguration> for Document {
    fn from(x: IceConfiguration) -> Self {
        Document::Ice(x)
    }
}

impl From<FplConfiguration> for Document {
    fn from(x: FplConfiguration) -> Self {
        Document::Fpl(x)
    }
}
