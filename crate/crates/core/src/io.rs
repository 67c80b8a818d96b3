//! The quiver text format and JSON encodings.
//!
//! ```text
//! # preprojective algebra of A2
//! vertex 1 K
//! vertex 2 K
//! arrow a: 1 -> 2
//! arrow a*: 2 -> 1
//! relation -a*.a
//! relation a.a*
//! dimension 1=1 2=1
//! stability 1=1 2=-1
//! ```
//!
//! Paths are written in function order: `a.a*` means `a*` first, then `a`.
//! A term may carry a rational coefficient, `3/2*a.a*`, and `e(v)` is the
//! trivial path at `v`. Tags default to `K`, weights (`@w`) to 1.

use std::fmt::{self, Write as _};
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::Zero;
use serde_json::{json, Map, Value};

use crate::algebra::{AlgebraElement, RelationSet};
use crate::error::{Error, ParseError, Result};
use crate::linalg::{parse_rational, rational_to_string, Matrix, Rational};
use crate::modrep::ModuleRep;
use crate::quiver::{
    Arrow, ArrowId, DimensionVector, Path, Quiver, StabilityVector, Vertex, VertexId, VertexTag,
};

#[derive(Clone, Debug)]
pub struct QuiverFile {
    pub quiver: Quiver,
    pub relations: RelationSet,
    pub dimensions: Vec<DimensionVector>,
    pub stability: Option<StabilityVector>,
}

impl QuiverFile {
    pub fn new(quiver: Quiver, relations: RelationSet) -> Self {
        QuiverFile {
            quiver,
            relations,
            dimensions: Vec::new(),
            stability: None,
        }
    }

    /// The first `dimension` line.
    pub fn dimension(&self) -> Option<&DimensionVector> {
        self.dimensions.first()
    }
}

struct Cursor {
    chars: Vec<char>,
    pos: usize,
    line: usize,
}

fn is_name_char(c: char) -> bool {
    c.is_alphanumeric() || c == '_' || c == '*' || c == '\''
}

impl Cursor {
    fn new(text: &str, line: usize) -> Self {
        Cursor {
            chars: text.chars().collect(),
            pos: 0,
            line,
        }
    }

    fn col(&self) -> usize {
        self.pos + 1
    }

    fn err(&self, message: impl Into<String>) -> ParseError {
        ParseError::new(self.line, self.col(), message)
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(char::is_whitespace) {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn at_end(&mut self) -> bool {
        self.skip_ws();
        self.pos >= self.chars.len()
    }

    fn eat(&mut self, s: &str) -> bool {
        self.skip_ws();
        let n = s.chars().count();
        if self.chars.len() >= self.pos + n
            && self.chars[self.pos..self.pos + n]
                .iter()
                .copied()
                .eq(s.chars())
        {
            self.pos += n;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, s: &str) -> std::result::Result<(), ParseError> {
        if self.eat(s) {
            Ok(())
        } else {
            Err(self.err(format!("expected `{s}`")))
        }
    }

    /// A name and its column.
    fn name(&mut self) -> std::result::Result<(String, usize), ParseError> {
        self.skip_ws();
        let start = self.pos;
        while self.peek().is_some_and(is_name_char) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected a name"));
        }
        Ok((self.chars[start..self.pos].iter().collect(), start + 1))
    }

    fn integer(&mut self) -> std::result::Result<BigInt, ParseError> {
        self.skip_ws();
        let start = self.pos;
        if self.peek() == Some('-') {
            self.pos += 1;
        }
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        let s: String = self.chars[start..self.pos].iter().collect();
        s.parse().map_err(|_| {
            self.pos = start;
            self.err("expected an integer")
        })
    }

    fn finish(&mut self) -> std::result::Result<(), ParseError> {
        if self.at_end() {
            Ok(())
        } else {
            Err(self.err("unexpected trailing input"))
        }
    }
}

fn semantic(line: usize, col: usize, e: Error) -> Error {
    ParseError::new(line, col, e.to_string()).into()
}

fn parse_relation(c: &mut Cursor, q: &Quiver) -> Result<AlgebraElement> {
    let mut element = AlgebraElement::zero();
    let mut first = true;
    while !c.at_end() {
        let mut sign = Rational::from_integer(1.into());
        if c.eat("-") {
            sign = -sign;
        } else if !c.eat("+") && !first {
            return Err(c.err("expected `+` or `-`").into());
        }
        first = false;
        c.skip_ws();
        let term_col = c.col();
        let mut coef = sign;
        if c.peek().is_some_and(|ch| ch.is_ascii_digit()) {
            let n = c.integer()?;
            let value = if c.eat("/") {
                let d = c.integer()?;
                if d.is_zero() {
                    return Err(c.err("zero denominator").into());
                }
                Rational::new(n, d)
            } else {
                Rational::from_integer(n)
            };
            coef *= value;
            c.expect("*")?;
        }
        let (head, head_col) = c.name()?;
        let path = if head == "e" && c.eat("(") {
            let (v, col) = c.name()?;
            c.expect(")")?;
            let v = q.vertex_by_name(&v).map_err(|e| semantic(c.line, col, e))?;
            Path::idempotent(v)
        } else {
            let mut arrows = Vec::new();
            let mut next = (head, head_col);
            loop {
                let a = q
                    .arrow_by_name(&next.0)
                    .map_err(|e| semantic(c.line, next.1, e))?;
                arrows.push(a);
                if c.peek() != Some('.') {
                    break;
                }
                c.pos += 1;
                next = c.name()?;
            }
            Path::from_function_order(q, &arrows).map_err(|e| semantic(c.line, term_col, e))?
        };
        element.add_term(path, coef);
    }
    if first {
        return Err(c.err("empty relation").into());
    }
    Ok(element)
}

/// `name=value` pairs, one per vertex at most.
fn parse_assignments(c: &mut Cursor, q: &Quiver) -> Result<Vec<(VertexId, BigInt)>> {
    let mut out: Vec<(VertexId, BigInt)> = Vec::new();
    while !c.at_end() {
        let (name, col) = c.name()?;
        let v = q
            .vertex_by_name(&name)
            .map_err(|e| semantic(c.line, col, e))?;
        if out.iter().any(|(w, _)| *w == v) {
            return Err(
                ParseError::new(c.line, col, format!("vertex `{name}` assigned twice")).into(),
            );
        }
        c.expect("=")?;
        out.push((v, c.integer()?));
    }
    Ok(out)
}

pub fn parse_quiver_file(text: &str) -> Result<QuiverFile> {
    let mut vertices: Vec<Vertex> = Vec::new();
    let mut arrows: Vec<Arrow> = Vec::new();
    let mut later: Vec<(usize, &str, String)> = Vec::new();
    for (ln, raw) in text.lines().enumerate() {
        let line = ln + 1;
        let content = raw.split('#').next().unwrap_or("");
        let mut c = Cursor::new(content, line);
        if c.at_end() {
            continue;
        }
        let (keyword, kw_col) = c.name()?;
        match keyword.as_str() {
            "vertex" => {
                let (name, col) = c.name()?;
                let tag = if c.at_end() {
                    VertexTag::K
                } else {
                    let (t, tcol) = c.name()?;
                    VertexTag::parse(&t)
                        .ok_or_else(|| ParseError::new(line, tcol, format!("unknown tag `{t}`")))?
                };
                c.finish()?;
                vertices.push(Vertex { name, tag });
                Quiver::new(vertices.clone(), arrows.clone())
                    .map_err(|e| semantic(line, col, e))?;
            }
            "arrow" => {
                let (name, col) = c.name()?;
                c.expect(":")?;
                let (s, scol) = c.name()?;
                c.expect("->")?;
                let (t, tcol) = c.name()?;
                let mut weight = 1;
                if c.eat("@") {
                    let w = c.integer()?;
                    weight = usize::try_from(&w)
                        .ok()
                        .filter(|&w| w > 0)
                        .ok_or_else(|| c.err("weight must be a positive integer"))?;
                }
                c.finish()?;
                let find = |n: &str, col: usize| {
                    vertices
                        .iter()
                        .position(|v| v.name == n)
                        .map(VertexId)
                        .ok_or_else(|| ParseError::new(line, col, format!("unknown vertex `{n}`")))
                };
                let (source, target) = (find(&s, scol)?, find(&t, tcol)?);
                arrows.push(Arrow {
                    name,
                    source,
                    target,
                    weight,
                });
                Quiver::new(vertices.clone(), arrows.clone())
                    .map_err(|e| semantic(line, col, e))?;
            }
            "relation" | "dimension" | "stability" => {
                later.push((line, raw.split('#').next().unwrap_or(""), keyword));
            }
            other => {
                return Err(
                    ParseError::new(line, kw_col, format!("unknown keyword `{other}`")).into(),
                );
            }
        }
    }
    let quiver = Quiver::new(vertices, arrows)?;
    let mut file = QuiverFile::new(quiver, RelationSet::empty());
    for (line, content, keyword) in later {
        let mut c = Cursor::new(content, line);
        c.name()?;
        c.skip_ws();
        let col = c.col();
        let q = &file.quiver;
        match keyword.as_str() {
            "relation" => {
                let r = parse_relation(&mut c, q)?;
                file.relations
                    .push(q, r)
                    .map_err(|e| semantic(line, col, e))?;
            }
            "dimension" => {
                let mut d = vec![0; q.num_vertices()];
                for (v, n) in parse_assignments(&mut c, q)? {
                    d[v.0] = usize::try_from(&n).map_err(|_| {
                        ParseError::new(line, col, "dimensions must be non-negative")
                    })?;
                }
                file.dimensions.push(DimensionVector(d));
            }
            _ => {
                if file.stability.is_some() {
                    return Err(ParseError::new(line, 1, "second `stability` line").into());
                }
                let mut z = vec![0; q.num_vertices()];
                for (v, n) in parse_assignments(&mut c, q)? {
                    z[v.0] = i64::try_from(&n)
                        .map_err(|_| ParseError::new(line, col, "weight too large"))?;
                }
                file.stability = Some(StabilityVector(z));
            }
        }
    }
    Ok(file)
}

impl fmt::Display for QuiverFile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let q = &self.quiver;
        for v in q.vertices() {
            writeln!(f, "vertex {} {}", v.name, v.tag.as_str())?;
        }
        for a in q.arrows() {
            write!(
                f,
                "arrow {}: {} -> {}",
                a.name,
                q.vertex(a.source).name,
                q.vertex(a.target).name
            )?;
            if a.weight != 1 {
                write!(f, " @{}", a.weight)?;
            }
            writeln!(f)?;
        }
        for r in self.relations.relations() {
            writeln!(f, "relation {}", r.display(q))?;
        }
        let assignments = |values: Vec<String>| {
            q.vertices()
                .iter()
                .zip(values)
                .map(|(v, x)| format!(" {}={x}", v.name))
                .collect::<String>()
        };
        for d in &self.dimensions {
            writeln!(
                f,
                "dimension{}",
                assignments(d.0.iter().map(usize::to_string).collect())
            )?;
        }
        if let Some(z) = &self.stability {
            writeln!(
                f,
                "stability{}",
                assignments(z.0.iter().map(i64::to_string).collect())
            )?;
        }
        Ok(())
    }
}

pub fn rational_json(x: &Rational) -> Value {
    Value::String(rational_to_string(x))
}

pub fn matrix_json(m: &Matrix) -> Value {
    Value::Array(
        (0..m.rows())
            .map(|r| Value::Array(m.row(r).iter().map(rational_json).collect()))
            .collect(),
    )
}

fn json_rational(v: &Value) -> Result<Rational> {
    let parsed = match v {
        Value::String(s) => parse_rational(s),
        Value::Number(n) => n.as_i64().map(|i| Rational::from_integer(i.into())),
        _ => None,
    };
    parsed.ok_or_else(|| Error::Module(format!("`{v}` is not a rational number")))
}

/// `{"arrows": {name: rows}, "dimension": {vertex: n}}`, rationals as strings.
pub fn module_to_json(m: &ModuleRep) -> Value {
    let q = m.quiver();
    let dimension: Map<String, Value> = q
        .vertices()
        .iter()
        .zip(&m.dims().0)
        .map(|(v, &n)| (v.name.clone(), json!(n)))
        .collect();
    let arrows: Map<String, Value> = q
        .arrows()
        .iter()
        .zip(m.matrices())
        .map(|(a, mat)| (a.name.clone(), matrix_json(mat)))
        .collect();
    json!({ "arrows": arrows, "dimension": dimension })
}

/// Inverse of [`module_to_json`]. Missing vertices have dimension 0 and
/// missing arrows act by zero.
pub fn module_from_json(q: Arc<Quiver>, value: &Value) -> Result<ModuleRep> {
    let obj = value
        .as_object()
        .ok_or_else(|| Error::Module("module must be a JSON object".into()))?;
    for key in obj.keys() {
        if key != "arrows" && key != "dimension" {
            return Err(Error::Module(format!("unexpected key `{key}`")));
        }
    }
    let mut dims = vec![0; q.num_vertices()];
    if let Some(d) = obj.get("dimension") {
        let d = d
            .as_object()
            .ok_or_else(|| Error::Module("`dimension` must map vertex names to integers".into()))?;
        for (name, n) in d {
            let v = q.vertex_by_name(name)?;
            dims[v.0] = n
                .as_u64()
                .ok_or_else(|| Error::Module(format!("bad dimension at `{name}`")))?
                as usize;
        }
    }
    let dims = DimensionVector(dims);
    let mut m = ModuleRep::zero(Arc::clone(&q), dims.clone())?;
    if let Some(arrows) = obj.get("arrows") {
        let arrows = arrows
            .as_object()
            .ok_or_else(|| Error::Module("`arrows` must map arrow names to matrices".into()))?;
        for (name, rows) in arrows {
            let a: ArrowId = q.arrow_by_name(name)?;
            let rows = rows.as_array().ok_or_else(|| {
                Error::Module(format!("matrix for `{name}` must be a list of rows"))
            })?;
            let mut parsed = Vec::with_capacity(rows.len());
            for row in rows {
                let row = row
                    .as_array()
                    .ok_or_else(|| Error::Module(format!("row of `{name}` must be a list")))?;
                parsed.push(row.iter().map(json_rational).collect::<Result<Vec<_>>>()?);
            }
            let arrow = q.arrow(a);
            let cols = dims.get(arrow.source);
            let mat = if parsed.is_empty() {
                Matrix::zeros(0, cols)
            } else {
                Matrix::from_rows(parsed)?
            };
            m.set_matrix(a, mat)?;
        }
    }
    Ok(m)
}

pub fn parse_module_json(q: Arc<Quiver>, text: &str) -> Result<ModuleRep> {
    let value: Value = serde_json::from_str(text)
        .map_err(|e| Error::Parse(ParseError::new(e.line(), e.column(), e.to_string())))?;
    module_from_json(q, &value)
}

/// Compact JSON with sorted keys and a trailing newline.
pub fn to_json_string(v: &Value) -> String {
    let mut s = serde_json::to_string(v).expect("serializable");
    s.push('\n');
    s
}

/// Render a module for humans, one matrix per arrow.
pub fn module_text(m: &ModuleRep) -> String {
    let q = m.quiver();
    let mut out = String::new();
    let dims: Vec<String> = q
        .vertices()
        .iter()
        .zip(&m.dims().0)
        .map(|(v, n)| format!("{}={n}", v.name))
        .collect();
    let _ = writeln!(out, "dimension {}", dims.join(" "));
    for (a, mat) in q.arrows().iter().zip(m.matrices()) {
        let rows: Vec<String> = (0..mat.rows())
            .map(|r| {
                let entries: Vec<String> = mat.row(r).iter().map(rational_to_string).collect();
                format!("[{}]", entries.join(" "))
            })
            .collect();
        let _ = writeln!(out, "{}: {}", a.name, rows.join(" "));
    }
    out
}
