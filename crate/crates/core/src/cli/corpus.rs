//! The `.clt` text format.
//!
//! ```text
//! # comment
//! space S2
//!   points s0 s1
//!   below s0 s1
//! end
//! map flip : S2 -> D2
//!   s0 -> 1
//!   s1 -> 0
//! end
//! map half : S2 -> D2 partial
//!   s1 -> 0
//! end
//! problem P : S2 -> D2
//!   members flip half
//! end
//! relation R : S2 -> D2
//!   s0 -> 0 1
//! end
//! ```
//!
//! Serialization sorts points, rows and member names, so it is canonical
//! up to the order of declarations.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt::Write as _;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::reduce::Item;
use crate::topo::{PartialMap, Problem, Relation, Space, DEFAULT_MEMBER_CAP};

/// Name, domain, codomain and the optional trailing word of a header.
type Signature<'h> = (&'h str, Arc<Space>, Arc<Space>, Option<&'h str>);

#[derive(Clone, Debug)]
pub enum Decl {
    Space(Arc<Space>),
    Map(PartialMap),
    Problem(Problem),
    Relation(Relation),
}

impl Decl {
    fn kind(&self) -> &'static str {
        match self {
            Decl::Space(_) => "space",
            Decl::Map(_) => "map",
            Decl::Problem(_) => "problem",
            Decl::Relation(_) => "relation",
        }
    }

    fn name(&self) -> &str {
        match self {
            Decl::Space(s) => s.name(),
            Decl::Map(m) => m.name(),
            Decl::Problem(p) => p.name(),
            Decl::Relation(r) => r.name(),
        }
    }
}

/// Declarations in order, with names unique per kind.
#[derive(Clone, Debug, Default)]
pub struct Corpus {
    decls: Vec<Decl>,
    index: HashMap<(&'static str, String), usize>,
}

impl Corpus {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn parse(text: &str) -> Result<Corpus> {
        let mut c = Corpus::new();
        c.parse_into(text)?;
        Ok(c)
    }

    /// Adds the declarations of `text`, which may refer to earlier ones.
    pub fn parse_into(&mut self, text: &str) -> Result<()> {
        Parser { corpus: self, lines: tokenize(text), pos: 0 }.run()
    }

    pub fn decls(&self) -> &[Decl] {
        &self.decls
    }

    fn lookup(&self, kind: &'static str, name: &str) -> Option<&Decl> {
        self.index.get(&(kind, name.to_string())).map(|&i| &self.decls[i])
    }

    pub fn space(&self, name: &str) -> Option<&Arc<Space>> {
        match self.lookup("space", name)? {
            Decl::Space(s) => Some(s),
            _ => None,
        }
    }

    pub fn map(&self, name: &str) -> Option<&PartialMap> {
        match self.lookup("map", name)? {
            Decl::Map(m) => Some(m),
            _ => None,
        }
    }

    pub fn problem(&self, name: &str) -> Option<&Problem> {
        match self.lookup("problem", name)? {
            Decl::Problem(p) => Some(p),
            _ => None,
        }
    }

    pub fn relation(&self, name: &str) -> Option<&Relation> {
        match self.lookup("relation", name)? {
            Decl::Relation(r) => Some(r),
            _ => None,
        }
    }

    /// A map, problem or relation by name, as a reducibility operand.
    /// Partial maps become singleton problems and relations the problem of
    /// their choice functions.
    pub fn item(&self, name: &str) -> Result<Item> {
        let found: Vec<&Decl> =
            ["map", "problem", "relation"].iter().filter_map(|k| self.lookup(k, name)).collect();
        match found.as_slice() {
            [] => Err(Error::Precondition(format!("no map, problem or relation named {name}"))),
            [Decl::Map(m)] => Ok(match m.clone().into_total() {
                Ok(t) => Item::Map(t),
                Err(_) => Item::Problem(Problem::singleton(m)),
            }),
            [Decl::Problem(p)] => Ok(Item::Problem(p.clone())),
            [Decl::Relation(r)] => Ok(Item::Problem(r.choice_functions(DEFAULT_MEMBER_CAP)?.renamed(r.name())?)),
            _ => Err(Error::Precondition(format!("{name} names more than one declaration"))),
        }
    }

    fn insert(&mut self, decl: Decl) -> Result<()> {
        let key = (decl.kind(), decl.name().to_string());
        if let Some(&i) = self.index.get(&key) {
            return match (&self.decls[i], &decl) {
                (Decl::Space(a), Decl::Space(b)) if a == b => Ok(()),
                (Decl::Map(a), Decl::Map(b)) if a == b => Ok(()),
                _ => Err(Error::Precondition(format!("{} {} is declared twice", key.0, key.1))),
            };
        }
        self.index.insert(key, self.decls.len());
        self.decls.push(decl);
        Ok(())
    }

    pub fn add_space(&mut self, space: Arc<Space>) -> Result<()> {
        self.insert(Decl::Space(space))
    }

    /// Adds `map`, declaring its spaces first if needed.
    pub fn add_map(&mut self, map: PartialMap) -> Result<()> {
        self.add_space(map.dom().clone())?;
        self.add_space(map.cod().clone())?;
        self.insert(Decl::Map(map))
    }

    /// Adds `problem`, declaring its spaces and members first if needed.
    pub fn add_problem(&mut self, problem: Problem) -> Result<()> {
        self.add_space(problem.dom().clone())?;
        self.add_space(problem.cod().clone())?;
        for m in problem.members() {
            self.add_map(m.clone())?;
        }
        self.insert(Decl::Problem(problem))
    }

    pub fn add_relation(&mut self, relation: Relation) -> Result<()> {
        self.add_space(relation.dom().clone())?;
        self.add_space(relation.cod().clone())?;
        self.insert(Decl::Relation(relation))
    }

    pub fn add_item(&mut self, item: &Item) -> Result<()> {
        match item {
            Item::Map(m) => self.add_map(m.as_partial().clone()),
            Item::Problem(p) => self.add_problem(p.clone()),
        }
    }

    pub fn serialize(&self) -> String {
        let mut out = String::new();
        for (k, decl) in self.decls.iter().enumerate() {
            if k > 0 {
                out.push('\n');
            }
            write_decl(&mut out, decl);
        }
        out
    }

    /// Equality of declarations up to the order of points.
    pub fn structurally_eq(&self, other: &Corpus) -> bool {
        self.decls.len() == other.decls.len()
            && self.decls.iter().zip(&other.decls).all(|(a, b)| decl_shape(a) == decl_shape(b))
    }
}

/// Everything about a declaration, keyed by point names.
#[derive(PartialEq, Eq)]
enum Shape {
    Space(String, BTreeSet<String>, BTreeSet<(String, String)>),
    Map(String, String, String, BTreeMap<String, String>),
    Problem(String, String, String, BTreeSet<BTreeMap<String, String>>),
    Relation(String, String, String, BTreeSet<(String, String)>),
}

fn rows_of(m: &PartialMap) -> BTreeMap<String, String> {
    (0..m.dom().len())
        .filter_map(|x| m.apply(x).map(|y| (m.dom().point(x).to_string(), m.cod().point(y).to_string())))
        .collect()
}

fn decl_shape(d: &Decl) -> Shape {
    match d {
        Decl::Space(s) => Shape::Space(
            s.name().to_string(),
            s.points().iter().cloned().collect(),
            s.below_pairs().map(|(x, y)| (s.point(x).to_string(), s.point(y).to_string())).collect(),
        ),
        Decl::Map(m) => Shape::Map(m.name().into(), m.dom().name().into(), m.cod().name().into(), rows_of(m)),
        Decl::Problem(p) => Shape::Problem(
            p.name().into(),
            p.dom().name().into(),
            p.cod().name().into(),
            p.members().iter().map(rows_of).collect(),
        ),
        Decl::Relation(r) => Shape::Relation(
            r.name().into(),
            r.dom().name().into(),
            r.cod().name().into(),
            r.pairs().iter().map(|&(x, y)| (r.dom().point(x).to_string(), r.cod().point(y).to_string())).collect(),
        ),
    }
}

fn write_decl(out: &mut String, decl: &Decl) {
    let w = "string write";
    match decl {
        Decl::Space(s) => {
            let mut points: Vec<&str> = s.points().iter().map(String::as_str).collect();
            points.sort_unstable();
            writeln!(out, "space {}", s.name()).expect(w);
            out.push_str("  points");
            for p in &points {
                write!(out, " {p}").expect(w);
            }
            out.push('\n');
            let mut below: Vec<(&str, &str)> =
                s.below_pairs().filter(|(x, y)| x != y).map(|(x, y)| (s.point(x), s.point(y))).collect();
            below.sort_unstable();
            for (x, y) in below {
                writeln!(out, "  below {x} {y}").expect(w);
            }
        }
        Decl::Map(m) => {
            let partial = if m.is_total() { "" } else { " partial" };
            writeln!(out, "map {} : {} -> {}{partial}", m.name(), m.dom().name(), m.cod().name()).expect(w);
            for (x, y) in rows_of(m) {
                writeln!(out, "  {x} -> {y}").expect(w);
            }
        }
        Decl::Problem(p) => {
            writeln!(out, "problem {} : {} -> {}", p.name(), p.dom().name(), p.cod().name()).expect(w);
            let mut names: Vec<&str> = p.members().iter().map(PartialMap::name).collect();
            names.sort_unstable();
            out.push_str("  members");
            for n in names {
                write!(out, " {n}").expect(w);
            }
            out.push('\n');
        }
        Decl::Relation(r) => {
            writeln!(out, "relation {} : {} -> {}", r.name(), r.dom().name(), r.cod().name()).expect(w);
            let mut rows: BTreeMap<&str, Vec<&str>> = BTreeMap::new();
            for &(x, y) in r.pairs() {
                rows.entry(r.dom().point(x)).or_default().push(r.cod().point(y));
            }
            for (x, mut ys) in rows {
                ys.sort_unstable();
                writeln!(out, "  {x} -> {}", ys.join(" ")).expect(w);
            }
        }
    }
    out.push_str("end\n");
}

struct Line {
    number: usize,
    tokens: Vec<String>,
}

fn tokenize(text: &str) -> Vec<Line> {
    text.lines()
        .enumerate()
        .map(|(i, l)| Line {
            number: i + 1,
            tokens: l.split('#').next().unwrap_or("").split_whitespace().map(String::from).collect(),
        })
        .filter(|l| !l.tokens.is_empty())
        .collect()
}

struct Parser<'a> {
    corpus: &'a mut Corpus,
    lines: Vec<Line>,
    pos: usize,
}

fn err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse { line, message: message.into() }
}

/// Attaches a line number to library errors.
fn at<T>(line: usize, r: Result<T>) -> Result<T> {
    r.map_err(|e| match e {
        Error::Parse { .. } => e,
        other => err(line, other.to_string()),
    })
}

impl Parser<'_> {
    fn run(mut self) -> Result<()> {
        while self.pos < self.lines.len() {
            let number = self.lines[self.pos].number;
            let head = self.lines[self.pos].tokens.clone();
            self.pos += 1;
            let body = self.body(number, &head[0])?;
            match head[0].as_str() {
                "space" => self.space(number, &head, &body)?,
                "map" => self.map(number, &head, &body)?,
                "problem" => self.problem(number, &head, &body)?,
                "relation" => self.relation(number, &head, &body)?,
                other => return Err(err(number, format!("expected a declaration, found `{other}`"))),
            }
        }
        Ok(())
    }

    /// Lines up to the matching `end`.
    fn body(&mut self, start: usize, kind: &str) -> Result<Vec<Line>> {
        let mut body = Vec::new();
        while self.pos < self.lines.len() {
            let line = std::mem::replace(&mut self.lines[self.pos], Line { number: 0, tokens: Vec::new() });
            self.pos += 1;
            if line.tokens == ["end"] {
                return Ok(body);
            }
            body.push(line);
        }
        Err(err(start, format!("{kind} block is missing `end`")))
    }

    fn space(&mut self, number: usize, head: &[String], body: &[Line]) -> Result<()> {
        let [_, name] = head else {
            return Err(err(number, "expected `space NAME`"));
        };
        let mut points = Vec::new();
        let mut below = Vec::new();
        for line in body {
            match line.tokens[0].as_str() {
                "points" => points.extend(line.tokens[1..].iter().cloned()),
                "below" if line.tokens.len() == 3 => below.push((line.tokens[1].clone(), line.tokens[2].clone())),
                _ => return Err(err(line.number, "expected `points ...` or `below X Y`")),
            }
        }
        let space = at(number, Space::build(name, &points, &below))?;
        if self.corpus.space(name).is_some() {
            return Err(err(number, format!("space {name} is declared twice")));
        }
        self.corpus.add_space(Arc::new(space))
    }

    /// `KIND NAME : DOM -> COD [extra]`.
    fn signature<'h>(
        &self,
        number: usize,
        head: &'h [String],
    ) -> Result<Signature<'h>> {
        if head.len() < 6 || head.len() > 7 || head[2] != ":" || head[4] != "->" {
            return Err(err(number, format!("expected `{} NAME : DOM -> COD`", head[0])));
        }
        let space = |n: &str| {
            self.corpus.space(n).cloned().ok_or_else(|| err(number, format!("unknown space {n}")))
        };
        Ok((&head[1], space(&head[3])?, space(&head[5])?, head.get(6).map(String::as_str)))
    }

    fn map(&mut self, number: usize, head: &[String], body: &[Line]) -> Result<()> {
        let (name, dom, cod, extra) = self.signature(number, head)?;
        let partial = match extra {
            None => false,
            Some("partial") => true,
            Some(other) => return Err(err(number, format!("unexpected `{other}`"))),
        };
        let mut table = vec![None; dom.len()];
        for line in body {
            let [x, arrow, y] = line.tokens.as_slice() else {
                return Err(err(line.number, "expected `POINT -> POINT`"));
            };
            if arrow != "->" {
                return Err(err(line.number, "expected `POINT -> POINT`"));
            }
            let xi = at(line.number, dom.require(x))?;
            let yi = at(line.number, cod.require(y))?;
            if table[xi].replace(yi).is_some() {
                return Err(err(line.number, format!("{x} is mapped twice")));
            }
        }
        if !partial && table.iter().any(Option::is_none) {
            return Err(err(number, format!("map {name} is not total; mark it `partial`")));
        }
        let map = at(number, PartialMap::new(name, dom, cod, table))?;
        if self.corpus.map(name).is_some() {
            return Err(err(number, format!("map {name} is declared twice")));
        }
        at(number, self.corpus.add_map(map))
    }

    fn problem(&mut self, number: usize, head: &[String], body: &[Line]) -> Result<()> {
        let (name, dom, cod, extra) = self.signature(number, head)?;
        if extra.is_some() {
            return Err(err(number, "unexpected token after the codomain"));
        }
        let mut members = Vec::new();
        for line in body {
            if line.tokens[0] != "members" {
                return Err(err(line.number, "expected `members ...`"));
            }
            for m in &line.tokens[1..] {
                let map = self.corpus.map(m).ok_or_else(|| err(line.number, format!("unknown map {m}")))?;
                if map.dom() != &dom || map.cod() != &cod {
                    return Err(err(line.number, format!("map {m} does not have type {} -> {}", dom.name(), cod.name())));
                }
                members.push(map.clone());
            }
        }
        let problem = at(number, Problem::new(name, dom, cod, members))?;
        if self.corpus.problem(name).is_some() {
            return Err(err(number, format!("problem {name} is declared twice")));
        }
        at(number, self.corpus.add_problem(problem))
    }

    fn relation(&mut self, number: usize, head: &[String], body: &[Line]) -> Result<()> {
        let (name, dom, cod, extra) = self.signature(number, head)?;
        if extra.is_some() {
            return Err(err(number, "unexpected token after the codomain"));
        }
        let mut pairs = BTreeSet::new();
        for line in body {
            if line.tokens.len() < 2 || line.tokens[1] != "->" {
                return Err(err(line.number, "expected `POINT -> POINT ...`"));
            }
            let x = at(line.number, dom.require(&line.tokens[0]))?;
            for y in &line.tokens[2..] {
                pairs.insert((x, at(line.number, cod.require(y))?));
            }
        }
        let relation = at(number, Relation::new(name, dom, cod, pairs))?;
        if self.corpus.relation(name).is_some() {
            return Err(err(number, format!("relation {name} is declared twice")));
        }
        at(number, self.corpus.add_relation(relation))
    }
}
