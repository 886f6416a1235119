//! The structure-file format.
//!
//! A file is a sequence of blocks (`category`, `bicategory`, `lax`, `icon`,
//! `oplax`, `codiscrete`, `cocycle`, each closed by `end`) and one-line
//! directives (`from_category`, `sigma`, `monoidal`, `ordinal`, `cylinder`,
//! `builtin`). Lines split on whitespace, `"..."` quotes a token and an
//! unquoted `#` starts a comment. Cells are referred to by name, or by id as
//! `@N` where a name is ambiguous.
//!
//! ```text
//! category C
//!   object x
//!   object y
//!   morphism f : x -> y
//! end
//!
//! bicategory B
//!   object X
//!   hom X X = C
//!   unit X = x
//!   compose X X X y after y = y
//! end
//! ```
//!
//! Composition entries always read `compose g after f = h`. Unlisted
//! entries take the evident default where one exists (composites with an
//! identity, identity constraints between equal 1-cells) and are an error
//! otherwise.

use std::collections::{BTreeMap, HashMap, HashSet};
use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use bicat_core::bicat::build::{
    codiscrete_bicategory, cocycle_bicategory_unchecked, from_category, FiniteGroup, PointedMagma, ThreeCochain,
};
use bicat_core::bicat::CompositionMap;
use bicat_core::cylinder::lax_cylinder;
use bicat_core::icon::Icon;
use bicat_core::laxfun::LaxFunctor;
use bicat_core::monoidal::{sigma, MonoidalCategory};
use bicat_core::oplax::OplaxNat;
use bicat_core::{
    corpus, FiniteBicategory, FiniteCategory, Functor, MorId, ObjId, OneCell, Strict2Category, StructureError,
    TwoCell,
};
use bicat_core::cat::Morphism;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum FormatError {
    #[error("{origin}:{line}: {message}")]
    Syntax { origin: String, line: usize, message: String },

    #[error("{origin}:{line}: {source}")]
    Structure {
        origin: String,
        line: usize,
        #[source]
        source: StructureError,
    },

    #[error("unknown {kind} `{name}`")]
    Unknown { kind: &'static str, name: String },

    #[error("`{name}` is of kind {found}, expected {expected}")]
    WrongKind {
        name: String,
        found: &'static str,
        expected: &'static str,
    },

    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
}

/// A named definition.
#[derive(Debug, Clone)]
pub enum Item {
    Category(Arc<FiniteCategory>),
    Bicategory(Arc<FiniteBicategory>),
    Monoidal(Arc<MonoidalCategory>),
    Functor(Arc<LaxFunctor>),
    Icon(Arc<Icon>),
    Oplax(Arc<OplaxNat>),
}

impl Item {
    pub fn kind(&self) -> &'static str {
        match self {
            Item::Category(_) => "category",
            Item::Bicategory(_) => "bicategory",
            Item::Monoidal(_) => "monoidal category",
            Item::Functor(_) => "lax functor",
            Item::Icon(_) => "icon",
            Item::Oplax(_) => "oplax transformation",
        }
    }
}

/// Every definition read so far, in order.
#[derive(Debug, Default, Clone)]
pub struct Document {
    items: BTreeMap<String, Item>,
    order: Vec<String>,
}

macro_rules! getter {
    ($fn:ident, $variant:ident, $ty:ty, $kind:literal) => {
        pub fn $fn(&self, name: &str) -> Result<&Arc<$ty>, FormatError> {
            match self.get(name)? {
                Item::$variant(x) => Ok(x),
                other => Err(FormatError::WrongKind {
                    name: name.to_string(),
                    found: other.kind(),
                    expected: $kind,
                }),
            }
        }
    };
}

impl Document {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn names(&self) -> &[String] {
        &self.order
    }

    pub fn get(&self, name: &str) -> Result<&Item, FormatError> {
        self.items.get(name).ok_or_else(|| FormatError::Unknown {
            kind: "definition",
            name: name.to_string(),
        })
    }

    getter!(category, Category, FiniteCategory, "category");
    getter!(bicategory, Bicategory, FiniteBicategory, "bicategory");
    getter!(monoidal, Monoidal, MonoidalCategory, "monoidal category");
    getter!(functor, Functor, LaxFunctor, "lax functor");
    getter!(icon, Icon, Icon, "icon");
    getter!(oplax, Oplax, OplaxNat, "oplax transformation");

    pub fn insert(&mut self, name: &str, item: Item) -> Result<(), StructureError> {
        if self.items.contains_key(name) {
            return Err(StructureError::Duplicate {
                kind: "definition",
                name: name.to_string(),
            });
        }
        self.items.insert(name.to_string(), item);
        self.order.push(name.to_string());
        Ok(())
    }

    pub fn load_path(&mut self, path: &Path) -> Result<(), FormatError> {
        let io = |source| FormatError::Io {
            path: path.to_path_buf(),
            source,
        };
        if path.is_dir() {
            let mut files: Vec<PathBuf> = std::fs::read_dir(path)
                .map_err(io)?
                .filter_map(|e| e.ok().map(|e| e.path()))
                .filter(|p| p.extension().is_some_and(|x| x == "bicat"))
                .collect();
            files.sort();
            for f in files {
                self.load_path(&f)?;
            }
            Ok(())
        } else {
            let text = std::fs::read_to_string(path).map_err(io)?;
            self.parse_str(&text, &path.display().to_string())
        }
    }

    pub fn parse_str(&mut self, text: &str, origin: &str) -> Result<(), FormatError> {
        let mut lines = Vec::new();
        for (i, raw) in text.lines().enumerate() {
            let tokens = tokenize(raw).map_err(|message| FormatError::Syntax {
                origin: origin.to_string(),
                line: i + 1,
                message,
            })?;
            if !tokens.is_empty() {
                lines.push(Line { number: i + 1, tokens });
            }
        }
        let mut p = Parser {
            doc: self,
            origin,
            lines: &lines,
            pos: 0,
        };
        p.run()
    }
}

#[derive(Debug, Clone)]
struct Token {
    text: String,
    quoted: bool,
}

impl Token {
    fn is(&self, word: &str) -> bool {
        !self.quoted && self.text == word
    }

    fn id(&self) -> Option<usize> {
        if self.quoted {
            return None;
        }
        self.text.strip_prefix('@').and_then(|n| n.parse().ok())
    }
}

struct Line {
    number: usize,
    tokens: Vec<Token>,
}

fn tokenize(line: &str) -> Result<Vec<Token>, String> {
    let mut out = Vec::new();
    let mut chars = line.chars().peekable();
    while let Some(&c) = chars.peek() {
        if c.is_whitespace() {
            chars.next();
        } else if c == '#' {
            break;
        } else if c == '"' {
            chars.next();
            let mut text = String::new();
            loop {
                match chars.next() {
                    Some('"') => break,
                    Some('\\') => match chars.next() {
                        Some(e) => text.push(e),
                        None => return Err("unterminated escape".into()),
                    },
                    Some(x) => text.push(x),
                    None => return Err("unterminated quote".into()),
                }
            }
            out.push(Token { text, quoted: true });
        } else {
            let mut text = String::new();
            while let Some(&x) = chars.peek() {
                if x.is_whitespace() {
                    break;
                }
                text.push(x);
                chars.next();
            }
            out.push(Token { text, quoted: false });
        }
    }
    Ok(out)
}

const RESERVED: [&str; 8] = ["=", ":", "->", "=>", "after", "end", "*", "|"];

/// Writes a name as a token, quoting where needed.
pub fn quote(name: &str) -> String {
    let plain = !name.is_empty()
        && !RESERVED.contains(&name)
        && !name.starts_with('#')
        && !name.starts_with('@')
        && !name.chars().any(|c| c.is_whitespace() || c == '"' || c == '\\');
    if plain {
        name.to_string()
    } else {
        let escaped: String = name
            .chars()
            .flat_map(|c| match c {
                '"' | '\\' => vec!['\\', c],
                c => vec![c],
            })
            .collect();
        format!("\"{escaped}\"")
    }
}

struct Parser<'a> {
    doc: &'a mut Document,
    origin: &'a str,
    lines: &'a [Line],
    pos: usize,
}

type Res<T> = Result<T, FormatError>;

/// Tokens of one line with a read position.
#[derive(Clone, Copy)]
struct Cursor<'a> {
    tokens: &'a [Token],
    pos: usize,
    line: usize,
    origin: &'a str,
}

impl<'a> Cursor<'a> {
    fn err(&self, message: impl Into<String>) -> FormatError {
        FormatError::Syntax {
            origin: self.origin.to_string(),
            line: self.line,
            message: message.into(),
        }
    }

    fn structure(&self, source: StructureError) -> FormatError {
        FormatError::Structure {
            origin: self.origin.to_string(),
            line: self.line,
            source,
        }
    }

    fn next(&mut self) -> Res<&'a Token> {
        let t = self.tokens.get(self.pos).ok_or_else(|| self.err("unexpected end of line"))?;
        self.pos += 1;
        Ok(t)
    }

    fn word(&mut self) -> Res<&'a str> {
        Ok(&self.next()?.text)
    }

    fn expect(&mut self, word: &str) -> Res<()> {
        let t = self.next()?;
        if t.is(word) {
            Ok(())
        } else {
            Err(self.err(format!("expected `{word}`, found `{}`", t.text)))
        }
    }

    fn finish(&self) -> Res<()> {
        match self.tokens.get(self.pos) {
            None => Ok(()),
            Some(t) => Err(self.err(format!("unexpected `{}`", t.text))),
        }
    }

    fn number(&mut self) -> Res<usize> {
        let t = self.next()?;
        t.text.parse().map_err(|_| self.err(format!("expected a number, found `{}`", t.text)))
    }
}

fn lookup<T>(
    cur: Cursor,
    token: &Token,
    kind: &str,
    len: usize,
    name_of: impl Fn(usize) -> T,
    matches: impl Fn(T) -> bool,
) -> Res<usize> {
    if let Some(i) = token.id() {
        return if i < len {
            Ok(i)
        } else {
            Err(cur.err(format!("{kind} id @{i} out of range")))
        };
    }
    let hits: Vec<usize> = (0..len).filter(|&i| matches(name_of(i))).collect();
    match hits.as_slice() {
        [i] => Ok(*i),
        [] => Err(cur.err(format!("unknown {kind} `{}`", token.text))),
        _ => Err(cur.err(format!("ambiguous {kind} `{}`; use an @id", token.text))),
    }
}

fn find_obj(cur: Cursor, c: &FiniteCategory, t: &Token) -> Res<ObjId> {
    lookup(cur, t, "object", c.num_objects(), |i| c.object_name(ObjId(i)), |n| n == t.text).map(ObjId)
}

fn find_mor(cur: Cursor, c: &FiniteCategory, t: &Token) -> Res<MorId> {
    lookup(cur, t, "morphism", c.num_morphisms(), |i| c.name(MorId(i)), |n| n == t.text).map(MorId)
}

fn find_bobj(cur: Cursor, b: &FiniteBicategory, t: &Token) -> Res<ObjId> {
    lookup(cur, t, "object", b.num_objects(), |i| b.object_name(ObjId(i)), |n| n == t.text).map(ObjId)
}

fn find_one(cur: Cursor, b: &FiniteBicategory, x: ObjId, y: ObjId, t: &Token) -> Res<OneCell> {
    find_obj(cur, b.hom(x, y), t).map(|id| OneCell::new(x, y, id))
}

fn find_two(cur: Cursor, b: &FiniteBicategory, x: ObjId, y: ObjId, t: &Token) -> Res<TwoCell> {
    find_mor(cur, b.hom(x, y), t).map(|id| TwoCell::new(x, y, id))
}

impl<'a> Parser<'a> {
    fn cursor(&self, line: &'a Line) -> Cursor<'a> {
        Cursor {
            tokens: &line.tokens,
            pos: 0,
            line: line.number,
            origin: self.origin,
        }
    }

    fn run(&mut self) -> Res<()> {
        while self.pos < self.lines.len() {
            let line = &self.lines[self.pos];
            self.pos += 1;
            let mut cur = self.cursor(line);
            let head = cur.next()?;
            if head.quoted {
                return Err(cur.err(format!("expected a keyword, found `\"{}\"`", head.text)));
            }
            let (name, item) = match head.text.as_str() {
                "category" => self.category(&mut cur)?,
                "bicategory" => self.bicategory(&mut cur)?,
                "lax" => self.lax(&mut cur)?,
                "icon" => self.icon(&mut cur)?,
                "oplax" => self.oplax(&mut cur)?,
                "codiscrete" => self.codiscrete(&mut cur)?,
                "cocycle" => self.cocycle(&mut cur)?,
                "from_category" | "sigma" | "monoidal" | "ordinal" | "builtin" => self.directive(&head.text, &mut cur)?,
                "cylinder" => {
                    self.cylinder(&mut cur)?;
                    continue;
                }
                other => return Err(cur.err(format!("unknown keyword `{other}`"))),
            };
            self.doc.insert(&name, item).map_err(|e| cur.structure(e))?;
        }
        Ok(())
    }

    /// The body lines of a block, up to its `end`.
    fn body(&mut self, opening: &Cursor) -> Res<Vec<Cursor<'a>>> {
        let mut out = Vec::new();
        while self.pos < self.lines.len() {
            let line = &self.lines[self.pos];
            self.pos += 1;
            if line.tokens.len() == 1 && line.tokens[0].is("end") {
                return Ok(out);
            }
            out.push(self.cursor(line));
        }
        Err(opening.err("block is missing its `end`"))
    }

    fn category(&mut self, cur: &mut Cursor<'a>) -> Res<(String, Item)> {
        let name = cur.word()?.to_string();
        cur.finish()?;
        let mut objects: Vec<String> = Vec::new();
        let mut morphisms: Vec<Morphism> = Vec::new();
        let mut identity: Vec<Option<MorId>> = Vec::new();
        let mut composites = HashMap::new();
        let obj = |c: Cursor, objects: &[String], t: &Token| {
            lookup(c, t, "object", objects.len(), |i| objects[i].as_str(), |n| n == t.text).map(ObjId)
        };
        let mor = |c: Cursor, morphisms: &[Morphism], t: &Token| {
            lookup(c, t, "morphism", morphisms.len(), |i| morphisms[i].name.as_str(), |n| n == t.text).map(MorId)
        };
        for mut c in self.body(cur)? {
            match c.word()? {
                "object" => {
                    objects.push(c.word()?.to_string());
                    identity.push(None);
                }
                "morphism" => {
                    let name = c.word()?.to_string();
                    c.expect(":")?;
                    let s = obj(c, &objects, c.next()?)?;
                    c.expect("->")?;
                    let t = obj(c, &objects, c.next()?)?;
                    morphisms.push(Morphism {
                        name,
                        source: s,
                        target: t,
                    });
                }
                "identity" => {
                    let x = obj(c, &objects, c.next()?)?;
                    c.expect("=")?;
                    identity[x.0] = Some(mor(c, &morphisms, c.next()?)?);
                }
                "compose" => {
                    let g = mor(c, &morphisms, c.next()?)?;
                    c.expect("after")?;
                    let f = mor(c, &morphisms, c.next()?)?;
                    c.expect("=")?;
                    let h = mor(c, &morphisms, c.next()?)?;
                    composites.insert((f, g), h);
                }
                other => return Err(c.err(format!("unknown category entry `{other}`"))),
            }
            c.finish()?;
        }
        let identity: Vec<MorId> = identity
            .iter()
            .enumerate()
            .map(|(x, id)| {
                id.unwrap_or_else(|| {
                    morphisms.push(Morphism {
                        name: format!("1_{}", objects[x]),
                        source: ObjId(x),
                        target: ObjId(x),
                    });
                    MorId(morphisms.len() - 1)
                })
            })
            .collect();
        for (i, m) in morphisms.iter().enumerate() {
            let f = MorId(i);
            composites.entry((f, identity[m.target.0])).or_insert(f);
            composites.entry((identity[m.source.0], f)).or_insert(f);
        }
        let c = FiniteCategory::from_tables(objects, morphisms, identity, composites).map_err(|e| cur.structure(e))?;
        Ok((name, Item::Category(Arc::new(c))))
    }

    fn bicategory(&mut self, cur: &mut Cursor<'a>) -> Res<(String, Item)> {
        let name = cur.word()?.to_string();
        cur.finish()?;
        let body = self.body(cur)?;
        let objects: Vec<String> = body
            .iter()
            .filter(|c| c.tokens.first().is_some_and(|t| t.is("object")))
            .map(|c| c.tokens.get(1).map(|t| t.text.clone()).ok_or_else(|| c.err("object needs a name")))
            .collect::<Res<_>>()?;
        let n = objects.len();
        let ob = |c: Cursor, t: &Token| lookup(c, t, "object", n, |i| objects[i].as_str(), |x| x == t.text).map(ObjId);
        let mut homs: Vec<Option<Arc<FiniteCategory>>> = vec![None; n * n];
        let mut units: Vec<Option<ObjId>> = vec![None; n];
        for c in &body {
            let mut c = *c;
            match c.word()? {
                "hom" => {
                    let (x, y) = (ob(c, c.next()?)?, ob(c, c.next()?)?);
                    c.expect("=")?;
                    homs[x.0 * n + y.0] = Some(self.doc.category(c.word()?)?.clone());
                    c.finish()?;
                }
                "unit" => {
                    let x = ob(c, c.next()?)?;
                    c.expect("=")?;
                    let t = c.next()?;
                    let hom = homs[x.0 * n + x.0].as_ref().ok_or_else(|| c.err("unit given before its hom"))?;
                    units[x.0] = Some(find_obj(c, hom, t)?);
                    c.finish()?;
                }
                _ => {}
            }
        }
        let homs: Vec<Arc<FiniteCategory>> = homs
            .into_iter()
            .enumerate()
            .map(|(i, h)| {
                h.ok_or_else(|| cur.err(format!("missing hom {} {}", objects[i / n], objects[i % n])))
            })
            .collect::<Res<_>>()?;
        let units: Vec<ObjId> = units
            .into_iter()
            .enumerate()
            .map(|(i, u)| u.ok_or_else(|| cur.err(format!("missing unit {}", objects[i]))))
            .collect::<Res<_>>()?;
        let hom = |x: usize, y: usize| &homs[x * n + y];
        let mut comp: Vec<CompositionMap> = Vec::with_capacity(n * n * n);
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    comp.push(CompositionMap {
                        obj: vec![ObjId(usize::MAX); hom(b, c).num_objects() * hom(a, b).num_objects()],
                        mor: vec![MorId(usize::MAX); hom(b, c).num_morphisms() * hom(a, b).num_morphisms()],
                    });
                }
            }
        }
        let mut twos = Vec::new();
        for c in &body {
            let mut c = *c;
            let head = c.word()?;
            if head != "compose" && head != "hcompose" {
                continue;
            }
            let (x, y, z) = (ob(c, c.next()?)?.0, ob(c, c.next()?)?.0, ob(c, c.next()?)?.0);
            let (gt, ft, ht) = {
                let g = c.next()?;
                c.expect("after")?;
                let f = c.next()?;
                c.expect("=")?;
                (g, f, c.next()?)
            };
            c.finish()?;
            let map = &mut comp[(x * n + y) * n + z];
            if head == "compose" {
                let g = find_obj(c, hom(y, z), gt)?;
                let f = find_obj(c, hom(x, y), ft)?;
                map.obj[g.0 * hom(x, y).num_objects() + f.0] = find_obj(c, hom(x, z), ht)?;
            } else {
                twos.push((c, x, y, z, gt, ft, ht));
            }
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    let (bc, ab) = (hom(b, c), hom(a, b));
                    let map = &mut comp[(a * n + b) * n + c];
                    for g in bc.objects() {
                        for f in ab.objects() {
                            let slot = &mut map.obj[g.0 * ab.num_objects() + f.0];
                            if slot.0 == usize::MAX {
                                *slot = default_compose(units[a], units[b], a == b, b == c, g, f).ok_or_else(|| {
                                    cur.err(format!(
                                        "missing compose {} {} {} {} after {}",
                                        objects[a],
                                        objects[b],
                                        objects[c],
                                        bc.object_name(g),
                                        ab.object_name(f)
                                    ))
                                })?;
                            }
                        }
                    }
                }
            }
        }
        for (c, x, y, z, gt, ft, ht) in twos {
            let beta = find_mor(c, hom(y, z), gt)?;
            let alpha = find_mor(c, hom(x, y), ft)?;
            let gamma = find_mor(c, hom(x, z), ht)?;
            comp[(x * n + y) * n + z].mor[beta.0 * hom(x, y).num_morphisms() + alpha.0] = gamma;
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    let (bc, ab, ac) = (hom(b, c), hom(a, b), hom(a, c));
                    let map = &mut comp[(a * n + b) * n + c];
                    for beta in bc.morphism_ids() {
                        for alpha in ab.morphism_ids() {
                            let i = beta.0 * ab.num_morphisms() + alpha.0;
                            if map.mor[i].0 == usize::MAX {
                                let d = default_hcompose(bc, ab, ac, map, units[a], units[b], a == b, b == c, beta, alpha);
                                map.mor[i] = d.ok_or_else(|| {
                                    cur.err(format!(
                                        "missing hcompose {} {} {} {} after {}",
                                        objects[a],
                                        objects[b],
                                        objects[c],
                                        bc.name(beta),
                                        ab.name(alpha)
                                    ))
                                })?;
                            }
                        }
                    }
                }
            }
        }
        let mut bicat =
            FiniteBicategory::new(name.clone(), objects.clone(), homs, comp, units).map_err(|e| cur.structure(e))?;
        for c in &body {
            let mut c = *c;
            match c.word()? {
                "associator" => {
                    let (w, x, y, z) = (ob(c, c.next()?)?, ob(c, c.next()?)?, ob(c, c.next()?)?, ob(c, c.next()?)?);
                    let h = find_one(c, &bicat, y, z, c.next()?)?;
                    let g = find_one(c, &bicat, x, y, c.next()?)?;
                    let f = find_one(c, &bicat, w, x, c.next()?)?;
                    c.expect("=")?;
                    let cell = find_two(c, &bicat, w, z, c.next()?)?;
                    c.finish()?;
                    bicat.set_associator(h, g, f, cell.id);
                }
                side @ ("left-unitor" | "right-unitor") => {
                    let (x, y) = (ob(c, c.next()?)?, ob(c, c.next()?)?);
                    let f = find_one(c, &bicat, x, y, c.next()?)?;
                    c.expect("=")?;
                    let cell = find_two(c, &bicat, x, y, c.next()?)?;
                    c.finish()?;
                    if side == "left-unitor" {
                        bicat.set_left_unitor(f, cell.id);
                    } else {
                        bicat.set_right_unitor(f, cell.id);
                    }
                }
                "object" | "hom" | "unit" | "compose" | "hcompose" => {}
                other => return Err(c.err(format!("unknown bicategory entry `{other}`"))),
            }
        }
        Ok((name, Item::Bicategory(Arc::new(bicat))))
    }

    fn lax(&mut self, cur: &mut Cursor<'a>) -> Res<(String, Item)> {
        let name = cur.word()?.to_string();
        cur.expect(":")?;
        let s = self.doc.bicategory(cur.word()?)?.clone();
        cur.expect("->")?;
        let t = self.doc.bicategory(cur.word()?)?.clone();
        cur.finish()?;
        let body = self.body(cur)?;
        let n = s.num_objects();
        let mut obj_map = vec![None; n];
        for c in &body {
            let mut c = *c;
            if c.word()? == "object" {
                let x = find_bobj(c, &s, c.next()?)?;
                c.expect("=")?;
                obj_map[x.0] = Some(find_bobj(c, &t, c.next()?)?);
                c.finish()?;
            }
        }
        let obj_map: Vec<ObjId> = obj_map
            .into_iter()
            .enumerate()
            .map(|(i, x)| x.ok_or_else(|| cur.err(format!("missing object {}", s.object_name(ObjId(i))))))
            .collect::<Res<_>>()?;
        let mut hom_maps: Vec<Functor> = Vec::with_capacity(n * n);
        for x in s.objects() {
            for y in s.objects() {
                let src = s.hom(x, y);
                hom_maps.push(Functor {
                    source: src.clone(),
                    target: t.hom(obj_map[x.0], obj_map[y.0]).clone(),
                    obj_map: vec![ObjId(usize::MAX); src.num_objects()],
                    mor_map: vec![MorId(usize::MAX); src.num_morphisms()],
                });
            }
        }
        let mut phi = vec![MorId(usize::MAX); s.num_pairs()];
        let mut phi0 = vec![MorId(usize::MAX); n];
        let mut later = Vec::new();
        for c in &body {
            let mut c = *c;
            match c.word()? {
                "one" => {
                    let (x, y) = (find_bobj(c, &s, c.next()?)?, find_bobj(c, &s, c.next()?)?);
                    let f = find_one(c, &s, x, y, c.next()?)?;
                    c.expect("=")?;
                    let g = find_one(c, &t, obj_map[x.0], obj_map[y.0], c.next()?)?;
                    c.finish()?;
                    hom_maps[x.0 * n + y.0].obj_map[f.id.0] = g.id;
                }
                "two" => {
                    let (x, y) = (find_bobj(c, &s, c.next()?)?, find_bobj(c, &s, c.next()?)?);
                    let a = find_two(c, &s, x, y, c.next()?)?;
                    c.expect("=")?;
                    let b = find_two(c, &t, obj_map[x.0], obj_map[y.0], c.next()?)?;
                    c.finish()?;
                    hom_maps[x.0 * n + y.0].mor_map[a.id.0] = b.id;
                }
                "phi" | "unit-constraint" => later.push(Cursor { pos: c.pos - 1, ..c }),
                "object" => {}
                other => return Err(c.err(format!("unknown lax functor entry `{other}`"))),
            }
        }
        for x in s.objects() {
            for y in s.objects() {
                let hm = &mut hom_maps[x.0 * n + y.0];
                for f in s.one_cells(x, y) {
                    if hm.obj_map[f.id.0].0 == usize::MAX {
                        if !s.is_unit(f) {
                            return Err(cur.err(format!("missing one {}", s.q1(f))));
                        }
                        hm.obj_map[f.id.0] = t.unit_cell(obj_map[x.0]).id;
                    }
                }
                for a in s.two_cells(x, y) {
                    if hm.mor_map[a.id.0].0 == usize::MAX {
                        if !s.is_id2(a) {
                            return Err(cur.err(format!("missing two {}", s.q2(a))));
                        }
                        let f = s.src2(a);
                        hm.mor_map[a.id.0] = hm.target.identity(hm.obj_map[f.id.0]);
                    }
                }
            }
        }
        let image = |f: OneCell| OneCell::new(obj_map[f.source.0], obj_map[f.target.0], hom_maps[f.source.0 * n + f.target.0].obj_map[f.id.0]);
        for mut c in later {
            if c.word()? == "phi" {
                let (x, y, z) = (find_bobj(c, &s, c.next()?)?, find_bobj(c, &s, c.next()?)?, find_bobj(c, &s, c.next()?)?);
                let g = find_one(c, &s, y, z, c.next()?)?;
                let f = find_one(c, &s, x, y, c.next()?)?;
                c.expect("=")?;
                let cell = find_two(c, &t, obj_map[x.0], obj_map[z.0], c.next()?)?;
                c.finish()?;
                phi[s.pair_index(g, f)] = cell.id;
            } else {
                let x = find_bobj(c, &s, c.next()?)?;
                c.expect("=")?;
                let cell = find_two(c, &t, obj_map[x.0], obj_map[x.0], c.next()?)?;
                c.finish()?;
                phi0[x.0] = cell.id;
            }
        }
        for (g, f) in s.composable_pairs() {
            let i = s.pair_index(g, f);
            if phi[i].0 == usize::MAX {
                let (l, r) = (t.compose1(image(g), image(f)), image(s.compose1(g, f)));
                if l != r {
                    return Err(cur.err(format!("missing phi for {} after {}", s.q1(g), s.q1(f))));
                }
                phi[i] = t.id2(l).id;
            }
        }
        for x in s.objects() {
            if phi0[x.0].0 == usize::MAX {
                let (j, fj) = (t.unit_cell(obj_map[x.0]), image(s.unit_cell(x)));
                if j != fj {
                    return Err(cur.err(format!("missing unit-constraint {}", s.object_name(x))));
                }
                phi0[x.0] = t.id2(j).id;
            }
        }
        let f = LaxFunctor::new(s, t, obj_map, hom_maps, phi, phi0).map_err(|e| cur.structure(e))?;
        Ok((name, Item::Functor(Arc::new(f))))
    }

    fn transformation_header(&mut self, cur: &mut Cursor<'a>) -> Res<(String, Arc<LaxFunctor>, Arc<LaxFunctor>)> {
        let name = cur.word()?.to_string();
        cur.expect(":")?;
        let f = self.doc.functor(cur.word()?)?.clone();
        cur.expect("=>")?;
        let g = self.doc.functor(cur.word()?)?.clone();
        cur.finish()?;
        if f.source.name() != g.source.name() || f.target.name() != g.target.name() {
            return Err(cur.err("functors are not parallel"));
        }
        Ok((name, f, g))
    }

    fn icon(&mut self, cur: &mut Cursor<'a>) -> Res<(String, Item)> {
        let (name, f, g) = self.transformation_header(cur)?;
        let (s, t) = (f.source.clone(), f.target.clone());
        let n = s.num_objects();
        let mut comps: Vec<Vec<MorId>> = s
            .objects()
            .flat_map(|x| s.objects().map(move |y| (x, y)))
            .map(|(x, y)| vec![MorId(usize::MAX); s.hom(x, y).num_objects()])
            .collect();
        for mut c in self.body(cur)? {
            c.expect("component")?;
            let (x, y) = (find_bobj(c, &s, c.next()?)?, find_bobj(c, &s, c.next()?)?);
            let a = find_one(c, &s, x, y, c.next()?)?;
            c.expect("=")?;
            let cell = find_two(c, &t, f.obj(x), f.obj(y), c.next()?)?;
            c.finish()?;
            comps[x.0 * n + y.0][a.id.0] = cell.id;
        }
        for a in s.all_one_cells() {
            let slot = &mut comps[a.source.0 * n + a.target.0][a.id.0];
            if slot.0 == usize::MAX {
                if f.map1(a) != g.map1(a) {
                    return Err(cur.err(format!("missing component {}", s.q1(a))));
                }
                *slot = t.id2(f.map1(a)).id;
            }
        }
        if f.obj_map != g.obj_map {
            return Err(cur.structure(StructureError::ObjectMapsDisagree(name)));
        }
        let icon = Icon {
            source: f,
            target: g,
            components: comps,
        };
        Ok((name, Item::Icon(Arc::new(icon))))
    }

    fn oplax(&mut self, cur: &mut Cursor<'a>) -> Res<(String, Item)> {
        let (name, f, g) = self.transformation_header(cur)?;
        let (s, t) = (f.source.clone(), f.target.clone());
        let n = s.num_objects();
        let body = self.body(cur)?;
        let mut components: Vec<Option<OneCell>> = vec![None; n];
        for c in &body {
            let mut c = *c;
            if c.word()? == "component" {
                let x = find_bobj(c, &s, c.next()?)?;
                c.expect("=")?;
                components[x.0] = Some(find_one(c, &t, f.obj(x), g.obj(x), c.next()?)?);
                c.finish()?;
            }
        }
        let components: Vec<OneCell> = s
            .objects()
            .map(|x| match components[x.0] {
                Some(k) => Ok(k),
                None if f.obj(x) == g.obj(x) => Ok(t.unit_cell(f.obj(x))),
                None => Err(cur.err(format!("missing component {}", s.object_name(x)))),
            })
            .collect::<Res<_>>()?;
        let mut constraints: Vec<Vec<MorId>> = s
            .objects()
            .flat_map(|x| s.objects().map(move |y| (x, y)))
            .map(|(x, y)| vec![MorId(usize::MAX); s.hom(x, y).num_objects()])
            .collect();
        for mut c in body {
            match c.word()? {
                "constraint" => {
                    let (x, y) = (find_bobj(c, &s, c.next()?)?, find_bobj(c, &s, c.next()?)?);
                    let a = find_one(c, &s, x, y, c.next()?)?;
                    c.expect("=")?;
                    let cell = find_two(c, &t, f.obj(x), g.obj(y), c.next()?)?;
                    c.finish()?;
                    constraints[x.0 * n + y.0][a.id.0] = cell.id;
                }
                "component" => {}
                other => return Err(c.err(format!("unknown oplax entry `{other}`"))),
            }
        }
        for a in s.all_one_cells() {
            let slot = &mut constraints[a.source.0 * n + a.target.0][a.id.0];
            if slot.0 == usize::MAX {
                let l = t.compose1(components[a.target.0], f.map1(a));
                let r = t.compose1(g.map1(a), components[a.source.0]);
                if l != r {
                    return Err(cur.err(format!("missing constraint {}", s.q1(a))));
                }
                *slot = t.id2(l).id;
            }
        }
        let u = OplaxNat {
            source: f,
            target: g,
            components,
            constraints,
        };
        Ok((name, Item::Oplax(Arc::new(u))))
    }

    fn codiscrete(&mut self, cur: &mut Cursor<'a>) -> Res<(String, Item)> {
        let name = cur.word()?.to_string();
        cur.finish()?;
        let body = self.body(cur)?;
        let mut elements: Vec<String> = Vec::new();
        let mut unit = None;
        let mut products = Vec::new();
        for mut c in body {
            match c.word()? {
                "elements" => {
                    while c.pos < c.tokens.len() {
                        elements.push(c.word()?.to_string());
                    }
                }
                "unit" => {
                    unit = Some(c.next()?);
                    c.finish()?;
                }
                _ => {
                    c.pos -= 1;
                    let x = c.next()?;
                    c.expect("*")?;
                    let y = c.next()?;
                    c.expect("=")?;
                    let z = c.next()?;
                    c.finish()?;
                    products.push((c, x, y, z));
                }
            }
        }
        let k = elements.len();
        let el = |c: Cursor, t: &Token| lookup(c, t, "element", k, |i| elements[i].as_str(), |x| x == t.text);
        let unit = match unit {
            Some(t) => el(*cur, t)?,
            None => return Err(cur.err("codiscrete needs a unit")),
        };
        let mut table = vec![usize::MAX; k * k];
        for x in 0..k {
            table[unit * k + x] = x;
            table[x * k + unit] = x;
        }
        for (c, x, y, z) in &products {
            table[el(*c, x)? * k + el(*c, y)?] = el(*c, z)?;
        }
        if let Some(i) = table.iter().position(|&v| v == usize::MAX) {
            return Err(cur.err(format!("missing product {} * {}", elements[i / k], elements[i % k])));
        }
        let m = PointedMagma::new(elements, table, unit).map_err(|e| cur.structure(e))?;
        let b = codiscrete_bicategory(&m).with_name(name.clone());
        Ok((name, Item::Bicategory(Arc::new(b))))
    }

    fn cocycle(&mut self, cur: &mut Cursor<'a>) -> Res<(String, Item)> {
        let name = cur.word()?.to_string();
        cur.finish()?;
        let (mut g, mut a) = (None, None);
        let mut values = Vec::new();
        for mut c in self.body(cur)? {
            match c.word()? {
                "group" => g = Some(c.number()?),
                "coefficients" => a = Some(c.number()?),
                "omega" => {
                    let (h, gg, f) = (c.number()?, c.number()?, c.number()?);
                    c.expect("=")?;
                    values.push((c.line, h, gg, f, c.number()?));
                }
                other => return Err(c.err(format!("unknown cocycle entry `{other}`"))),
            }
            c.finish()?;
        }
        let (Some(n), Some(m)) = (g, a) else {
            return Err(cur.err("cocycle needs `group` and `coefficients` orders"));
        };
        if n == 0 || m == 0 {
            return Err(cur.err("group orders must be positive"));
        }
        let mut w = ThreeCochain::zero(n);
        for (line, h, gg, f, v) in values {
            if h >= n || gg >= n || f >= n || v >= m {
                return Err(FormatError::Syntax {
                    origin: self.origin.to_string(),
                    line,
                    message: "cochain entry out of range".into(),
                });
            }
            w.set(n, h, gg, f, v);
        }
        let b = cocycle_bicategory_unchecked(&FiniteGroup::cyclic(n), &FiniteGroup::cyclic(m), &w)
            .map_err(|e| cur.structure(e))?
            .with_name(name.clone());
        Ok((name, Item::Bicategory(Arc::new(b))))
    }

    fn directive(&mut self, kind: &str, cur: &mut Cursor<'a>) -> Res<(String, Item)> {
        let name = cur.word()?.to_string();
        cur.expect("=")?;
        let arg = cur.next()?;
        cur.finish()?;
        let item = match kind {
            "from_category" => {
                let c = self.doc.category(&arg.text)?;
                Item::Bicategory(Arc::new(from_category(c).with_name(name.clone())))
            }
            "sigma" => {
                let v = self.doc.monoidal(&arg.text)?;
                Item::Bicategory(Arc::new(sigma(v).map_err(|e| cur.structure(e))?.with_name(name.clone())))
            }
            "monoidal" => {
                let b = self.doc.bicategory(&arg.text)?;
                let mut v = MonoidalCategory::from_one_object(b).map_err(|e| cur.structure(e))?;
                v.name = name.clone();
                Item::Monoidal(Arc::new(v))
            }
            "ordinal" => {
                let k: usize = arg.text.parse().map_err(|_| cur.err("ordinal needs a number"))?;
                Item::Bicategory(Arc::new(corpus::ordinal(k).as_ref().clone().with_name(name.clone())))
            }
            "builtin" => builtin(&arg.text).ok_or_else(|| cur.err(format!("unknown builtin `{}`", arg.text)))?,
            _ => unreachable!("dispatched on known directives"),
        };
        Ok((name, item))
    }

    /// `cylinder C = B` defines `C`, its legs `C.leg0` and `C.leg1`, and the
    /// crossing transformation `C.crossing`.
    fn cylinder(&mut self, cur: &mut Cursor<'a>) -> Res<()> {
        let name = cur.word()?.to_string();
        cur.expect("=")?;
        let b = self.doc.bicategory(cur.word()?)?.clone();
        cur.finish()?;
        let base = Strict2Category::new(b).map_err(|e| cur.structure(e))?;
        let cyl = lax_cylinder(&base).map_err(|e| cur.structure(e))?;
        let total = Arc::new(cyl.total.as_ref().clone().with_name(name.clone()));
        let relink = |f: &LaxFunctor| {
            let mut f = f.clone();
            f.target = total.clone();
            Arc::new(f)
        };
        let legs = [relink(&cyl.legs[0]), relink(&cyl.legs[1])];
        let mut crossing = cyl.crossing.clone();
        crossing.source = legs[0].clone();
        crossing.target = legs[1].clone();
        let s = |e| cur.structure(e);
        self.doc.insert(&name, Item::Bicategory(total.clone())).map_err(s)?;
        self.doc.insert(&format!("{name}.leg0"), Item::Functor(legs[0].clone())).map_err(s)?;
        self.doc.insert(&format!("{name}.leg1"), Item::Functor(legs[1].clone())).map_err(s)?;
        self.doc.insert(&format!("{name}.crossing"), Item::Oplax(Arc::new(crossing))).map_err(s)
    }
}

/// `g∘f` when one factor is an identity 1-cell.
fn default_compose(unit_a: ObjId, unit_b: ObjId, ab_loop: bool, bc_loop: bool, g: ObjId, f: ObjId) -> Option<ObjId> {
    if bc_loop && g == unit_b {
        Some(f)
    } else if ab_loop && f == unit_a {
        Some(g)
    } else {
        None
    }
}

/// `β⋆α` when both are identities, or one is the identity of an identity
/// 1-cell.
#[allow(clippy::too_many_arguments)]
fn default_hcompose(
    bc: &FiniteCategory,
    ab: &FiniteCategory,
    ac: &FiniteCategory,
    map: &CompositionMap,
    unit_a: ObjId,
    unit_b: ObjId,
    ab_loop: bool,
    bc_loop: bool,
    beta: MorId,
    alpha: MorId,
) -> Option<MorId> {
    let (g, f) = (bc.source(beta), ab.source(alpha));
    if bc.is_identity(beta) && ab.is_identity(alpha) {
        let gf = map.obj[g.0 * ab.num_objects() + f.0];
        Some(ac.identity(gf))
    } else if bc_loop && bc.is_identity(beta) && g == unit_b {
        Some(alpha)
    } else if ab_loop && ab.is_identity(alpha) && f == unit_a {
        Some(beta)
    } else {
        None
    }
}

/// Definitions available through `builtin NAME = key`.
pub const BUILTINS: [&str; 21] = [
    "terminal",
    "walking-arrow",
    "walking-two-cell",
    "thickened-arrow",
    "codiscrete-magma",
    "z2-cocycle",
    "z3-trivial-cocycle",
    "collapsed-two-cell",
    "product-ambient",
    "unliftable",
    "ordinal-2",
    "discrete-z2",
    "bool-max",
    "idempotent",
    "chain-max",
    "chain-trunc",
    "arrow-into-thickened",
    "arrow-to-terminal",
    "arrow-into-two-cell",
    "lax-trunc-to-max",
    "sigma-bool-max",
];

pub fn builtin(key: &str) -> Option<Item> {
    let b = Item::Bicategory;
    let m = Item::Monoidal;
    let f = |x: LaxFunctor| Item::Functor(Arc::new(x));
    Some(match key {
        "terminal" => b(corpus::terminal()),
        "walking-arrow" => b(corpus::walking_arrow()),
        "walking-two-cell" => b(corpus::walking_two_cell()),
        "thickened-arrow" => b(corpus::thickened_arrow()),
        "codiscrete-magma" => b(corpus::codiscrete_magma()),
        "z2-cocycle" => b(corpus::z2_cocycle()),
        "z3-trivial-cocycle" => b(corpus::z3_trivial_cocycle()),
        "collapsed-two-cell" => b(corpus::collapsed_two_cell()),
        "product-ambient" => b(corpus::product_ambient()),
        "unliftable" => b(corpus::unliftable()),
        "ordinal-2" => b(corpus::ordinal(2)),
        "discrete-z2" => m(corpus::discrete_z2()),
        "bool-max" => m(corpus::bool_max()),
        "idempotent" => m(corpus::idempotent()),
        "chain-max" => m(corpus::chain_max()),
        "chain-trunc" => m(corpus::chain_trunc()),
        "arrow-into-thickened" => f(corpus::arrow_into_thickened()),
        "arrow-to-terminal" => f(corpus::arrow_to_terminal()),
        "arrow-into-two-cell" => f(corpus::arrow_into_two_cell()),
        "lax-trunc-to-max" => f(corpus::lax_trunc_to_max().ok()?),
        "sigma-bool-max" => b(corpus::sigma_of(&corpus::bool_max())),
        _ => return None,
    })
}

/// Serializes definitions back into the file format. Dependencies are
/// written first, once each.
#[derive(Default)]
pub struct Writer {
    out: String,
    written: HashSet<String>,
}

fn obj_token(names: &[&str], x: usize) -> String {
    if names.iter().filter(|&&n| n == names[x]).count() == 1 && !names[x].starts_with('@') {
        quote(names[x])
    } else {
        format!("@{x}")
    }
}

fn cat_obj(c: &FiniteCategory, x: ObjId) -> String {
    let names: Vec<&str> = c.objects().map(|o| c.object_name(o)).collect();
    obj_token(&names, x.0)
}

fn cat_mor(c: &FiniteCategory, f: MorId) -> String {
    let names: Vec<&str> = c.morphism_ids().map(|m| c.name(m)).collect();
    obj_token(&names, f.0)
}

fn bobj(b: &FiniteBicategory, x: ObjId) -> String {
    let names: Vec<&str> = b.objects().map(|o| b.object_name(o)).collect();
    obj_token(&names, x.0)
}

fn one(b: &FiniteBicategory, f: OneCell) -> String {
    cat_obj(b.hom(f.source, f.target), f.id)
}

fn two(b: &FiniteBicategory, a: TwoCell) -> String {
    cat_mor(b.hom(a.source, a.target), a.id)
}

impl Writer {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn finish(self) -> String {
        self.out
    }

    fn claim(&mut self, name: &str) -> bool {
        self.written.insert(name.to_string())
    }

    pub fn category(&mut self, name: &str, c: &FiniteCategory) {
        if !self.claim(name) {
            return;
        }
        let _ = writeln!(self.out, "category {}", quote(name));
        for x in c.objects() {
            let _ = writeln!(self.out, "  object {}", quote(c.object_name(x)));
        }
        for f in c.morphism_ids() {
            let _ = writeln!(
                self.out,
                "  morphism {} : {} -> {}",
                quote(c.name(f)),
                cat_obj(c, c.source(f)),
                cat_obj(c, c.target(f))
            );
        }
        for x in c.objects() {
            let _ = writeln!(self.out, "  identity {} = {}", cat_obj(c, x), cat_mor(c, c.identity(x)));
        }
        let mut entries: Vec<_> = c.composites().iter().collect();
        entries.sort();
        for (&(f, g), &h) in entries {
            let default = (g == c.identity(c.target(f)) && h == f) || (f == c.identity(c.source(g)) && h == g);
            if !default {
                let _ = writeln!(self.out, "  compose {} after {} = {}", cat_mor(c, g), cat_mor(c, f), cat_mor(c, h));
            }
        }
        self.out.push_str("end\n\n");
    }

    pub fn bicategory(&mut self, b: &FiniteBicategory) {
        let name = b.name().to_string();
        if self.written.contains(&name) {
            return;
        }
        for x in b.objects() {
            for y in b.objects() {
                let cname = format!("{name}/{}/{}", b.object_name(x), b.object_name(y));
                self.category(&cname, b.hom(x, y));
            }
        }
        self.claim(&name);
        let _ = writeln!(self.out, "bicategory {}", quote(&name));
        for x in b.objects() {
            let _ = writeln!(self.out, "  object {}", quote(b.object_name(x)));
        }
        for x in b.objects() {
            for y in b.objects() {
                let cname = format!("{name}/{}/{}", b.object_name(x), b.object_name(y));
                let _ = writeln!(self.out, "  hom {} {} = {}", bobj(b, x), bobj(b, y), quote(&cname));
            }
        }
        for x in b.objects() {
            let _ = writeln!(self.out, "  unit {} = {}", bobj(b, x), one(b, b.unit_cell(x)));
        }
        let units: Vec<ObjId> = b.objects().map(|x| b.unit_cell(x).id).collect();
        for x in b.objects() {
            for y in b.objects() {
                for z in b.objects() {
                    let map = b.composition_map(x, y, z);
                    let (bc, ab) = (b.hom(y, z), b.hom(x, y));
                    let xyz = format!("{} {} {}", bobj(b, x), bobj(b, y), bobj(b, z));
                    for g in bc.objects() {
                        for f in ab.objects() {
                            let h = map.obj[g.0 * ab.num_objects() + f.0];
                            if default_compose(units[x.0], units[y.0], x == y, y == z, g, f) != Some(h) {
                                let _ = writeln!(
                                    self.out,
                                    "  compose {xyz} {} after {} = {}",
                                    cat_obj(bc, g),
                                    cat_obj(ab, f),
                                    cat_obj(b.hom(x, z), h)
                                );
                            }
                        }
                    }
                    for beta in bc.morphism_ids() {
                        for alpha in ab.morphism_ids() {
                            let gamma = map.mor[beta.0 * ab.num_morphisms() + alpha.0];
                            let d = default_hcompose(bc, ab, b.hom(x, z), map, units[x.0], units[y.0], x == y, y == z, beta, alpha);
                            if d != Some(gamma) {
                                let _ = writeln!(
                                    self.out,
                                    "  hcompose {xyz} {} after {} = {}",
                                    cat_mor(bc, beta),
                                    cat_mor(ab, alpha),
                                    cat_mor(b.hom(x, z), gamma)
                                );
                            }
                        }
                    }
                }
            }
        }
        let default = |s: OneCell, t: OneCell, cell: TwoCell| s == t && cell == b.id2(s);
        for (h, g, f) in b.composable_triples() {
            if let Some(a) = b.assoc_entry(h, g, f) {
                if !default(b.compose1(b.compose1(h, g), f), b.compose1(h, b.compose1(g, f)), a) {
                    let _ = writeln!(
                        self.out,
                        "  associator {} {} {} {} {} {} {} = {}",
                        bobj(b, f.source),
                        bobj(b, g.source),
                        bobj(b, h.source),
                        bobj(b, h.target),
                        one(b, h),
                        one(b, g),
                        one(b, f),
                        two(b, a)
                    );
                }
            }
        }
        for f in b.all_one_cells() {
            let (x, y) = (bobj(b, f.source), bobj(b, f.target));
            if let Some(l) = b.lunitor_entry(f) {
                if !default(b.compose1(b.unit_cell(f.target), f), f, l) {
                    let _ = writeln!(self.out, "  left-unitor {x} {y} {} = {}", one(b, f), two(b, l));
                }
            }
            if let Some(r) = b.runitor_entry(f) {
                if !default(b.compose1(f, b.unit_cell(f.source)), f, r) {
                    let _ = writeln!(self.out, "  right-unitor {x} {y} {} = {}", one(b, f), two(b, r));
                }
            }
        }
        self.out.push_str("end\n\n");
    }

    /// Writes `Σ V` under the name `V/sigma` and reads `V` back from it.
    pub fn monoidal(&mut self, v: &MonoidalCategory) -> Result<(), StructureError> {
        if self.written.contains(&v.name) {
            return Ok(());
        }
        let b = sigma(v)?.with_name(format!("{}/sigma", v.name));
        self.bicategory(&b);
        self.claim(&v.name);
        let _ = writeln!(self.out, "monoidal {} = {}\n", quote(&v.name), quote(b.name()));
        Ok(())
    }

    pub fn functor(&mut self, name: &str, f: &LaxFunctor) {
        if self.written.contains(name) {
            return;
        }
        let (s, t) = (&f.source, &f.target);
        self.bicategory(s);
        self.bicategory(t);
        self.claim(name);
        let _ = writeln!(self.out, "lax {} : {} -> {}", quote(name), quote(s.name()), quote(t.name()));
        for x in s.objects() {
            let _ = writeln!(self.out, "  object {} = {}", bobj(s, x), bobj(t, f.obj(x)));
        }
        for x in s.objects() {
            for y in s.objects() {
                let xy = format!("{} {}", bobj(s, x), bobj(s, y));
                for g in s.one_cells(x, y) {
                    let fg = f.map1(g);
                    if !(s.is_unit(g) && fg == t.unit_cell(f.obj(x))) {
                        let _ = writeln!(self.out, "  one {xy} {} = {}", one(s, g), one(t, fg));
                    }
                }
                for a in s.two_cells(x, y) {
                    let fa = f.map2(a);
                    if !(s.is_id2(a) && fa == t.id2(f.map1(s.src2(a)))) {
                        let _ = writeln!(self.out, "  two {xy} {} = {}", two(s, a), two(t, fa));
                    }
                }
            }
        }
        for (g, h) in s.composable_pairs() {
            let c = f.phi(g, h);
            if !t.is_id2(c) {
                let _ = writeln!(
                    self.out,
                    "  phi {} {} {} {} {} = {}",
                    bobj(s, h.source),
                    bobj(s, h.target),
                    bobj(s, g.target),
                    one(s, g),
                    one(s, h),
                    two(t, c)
                );
            }
        }
        for x in s.objects() {
            let c = f.phi0(x);
            if !t.is_id2(c) {
                let _ = writeln!(self.out, "  unit-constraint {} = {}", bobj(s, x), two(t, c));
            }
        }
        self.out.push_str("end\n\n");
    }

    pub fn icon(&mut self, name: &str, a: &Icon) {
        let (fs, ft) = (format!("{name}/source"), format!("{name}/target"));
        self.functor(&fs, &a.source);
        self.functor(&ft, &a.target);
        let (s, t) = (&a.source.source, &a.source.target);
        let _ = writeln!(self.out, "icon {} : {} => {}", quote(name), quote(&fs), quote(&ft));
        for f in s.all_one_cells() {
            let c = a.component(f);
            if !t.is_id2(c) {
                let _ = writeln!(
                    self.out,
                    "  component {} {} {} = {}",
                    bobj(s, f.source),
                    bobj(s, f.target),
                    one(s, f),
                    two(t, c)
                );
            }
        }
        self.out.push_str("end\n\n");
    }

    pub fn oplax(&mut self, name: &str, u: &OplaxNat) {
        let (fs, ft) = (format!("{name}/source"), format!("{name}/target"));
        self.functor(&fs, &u.source);
        self.functor(&ft, &u.target);
        let (s, t) = (&u.source.source, &u.source.target);
        let _ = writeln!(self.out, "oplax {} : {} => {}", quote(name), quote(&fs), quote(&ft));
        for x in s.objects() {
            let _ = writeln!(self.out, "  component {} = {}", bobj(s, x), one(t, u.component(x)));
        }
        for f in s.all_one_cells() {
            let c = u.constraint(f);
            if !t.is_id2(c) {
                let _ = writeln!(
                    self.out,
                    "  constraint {} {} {} = {}",
                    bobj(s, f.source),
                    bobj(s, f.target),
                    one(s, f),
                    two(t, c)
                );
            }
        }
        self.out.push_str("end\n\n");
    }
}
