//! A small text format for presentations.
//!
//! ```text
//! # the quantum plane
//! algebra plane
//! params q
//! generators x1 x2
//! rules
//! x2*x1 = q^-1*x1*x2
//! weights
//! x1 = (1, 0)
//! x2 = (0, 1)
//! ```
//!
//! or a single constructor call such as `use quantum_matrices(m=2, n=3)`.

use std::fmt::Write as _;
use std::sync::Arc;

use num_bigint::BigInt;
use strata_lab::pbw::{normal_form, Element, GeneratorKind, Letter, Monomial, Presentation, PresentationBuilder, Word};
use strata_lab::zoo::{
    quantized_weyl, quantum_affine, quantum_euclidean, quantum_matrices, quantum_symplectic, quantum_torus,
    AffineParams, MatrixParams, WeylParams,
};
use strata_lab::{Coefficient, Error, ParamContext, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    QuantumAffine,
    QuantumTorus,
    QuantumMatrices,
    QuantizedWeyl,
    QuantumSymplectic,
    QuantumEuclidean,
}

impl Family {
    const ALL: [(&'static str, Family); 6] = [
        ("quantum_affine", Family::QuantumAffine),
        ("quantum_torus", Family::QuantumTorus),
        ("quantum_matrices", Family::QuantumMatrices),
        ("quantized_weyl", Family::QuantizedWeyl),
        ("quantum_symplectic", Family::QuantumSymplectic),
        ("quantum_euclidean", Family::QuantumEuclidean),
    ];

    pub fn name(self) -> &'static str {
        Family::ALL.iter().find(|(_, f)| *f == self).unwrap().0
    }
}

/// `use family(n=.., m=.., single=sym)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZooCall {
    pub family: Family,
    pub n: usize,
    /// Rows, for quantum matrices; defaults to `n`.
    pub m: Option<usize>,
    /// One-parameter version in the named symbol.
    pub single: Option<String>,
}

/// A built algebra together with its matrix parameters when it has them.
#[derive(Clone, Debug)]
pub struct Algebra {
    pub presentation: Presentation,
    pub matrix_params: Option<MatrixParams>,
    pub zoo: Option<ZooCall>,
}

impl ZooCall {
    pub fn build(&self) -> Result<Algebra> {
        let unsupported = |what: &str| {
            Err(Error::Precondition(format!("{} does not take `{what}`", self.family.name())))
        };
        if self.m.is_some() && self.family != Family::QuantumMatrices {
            return unsupported("m");
        }
        let affine = || match &self.single {
            Some(s) => AffineParams::single(self.n, s),
            None => Ok(AffineParams::generic(self.n)),
        };
        let mut matrix_params = None;
        let presentation = match self.family {
            Family::QuantumAffine => quantum_affine(&affine()?)?,
            Family::QuantumTorus => quantum_torus(&affine()?)?,
            Family::QuantumMatrices => {
                let m = self.m.unwrap_or(self.n);
                let size = m.max(self.n);
                let params = match &self.single {
                    Some(s) => MatrixParams::single(size, s)?,
                    None => MatrixParams::generic(size),
                };
                let p = quantum_matrices(m, self.n, &params)?;
                matrix_params = Some(params);
                p
            }
            Family::QuantizedWeyl => {
                if self.single.is_some() {
                    return unsupported("single");
                }
                quantized_weyl(&WeylParams::generic(self.n))?
            }
            Family::QuantumSymplectic | Family::QuantumEuclidean => {
                if self.single.is_some() {
                    return unsupported("single");
                }
                if self.family == Family::QuantumSymplectic {
                    quantum_symplectic(self.n)?
                } else {
                    quantum_euclidean(self.n)?
                }
            }
        };
        Ok(Algebra { presentation, matrix_params, zoo: Some(self.clone()) })
    }
}

fn err(line: usize, col: usize, msg: impl Into<String>) -> Error {
    Error::Parse { line, col, msg: msg.into() }
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Ident(String),
    Int(BigInt),
    Sym(char),
}

struct Lexer {
    line: usize,
    toks: Vec<(Tok, usize)>,
    pos: usize,
    end_col: usize,
}

impl Lexer {
    fn new(line: usize, text: &str) -> Result<Self> {
        let chars: Vec<char> = text.chars().collect();
        let mut toks = Vec::new();
        let mut k = 0;
        while k < chars.len() {
            let c = chars[k];
            let col = k + 1;
            if c.is_whitespace() {
                k += 1;
            } else if c.is_ascii_alphabetic() || c == '_' {
                let start = k;
                while k < chars.len() && (chars[k].is_ascii_alphanumeric() || chars[k] == '_') {
                    k += 1;
                }
                toks.push((Tok::Ident(chars[start..k].iter().collect()), col));
            } else if c.is_ascii_digit() {
                let start = k;
                while k < chars.len() && chars[k].is_ascii_digit() {
                    k += 1;
                }
                let s: String = chars[start..k].iter().collect();
                toks.push((Tok::Int(s.parse().expect("digits")), col));
            } else if "*^+-()=,".contains(c) {
                toks.push((Tok::Sym(c), col));
                k += 1;
            } else {
                return Err(err(line, col, format!("unexpected character `{c}`")));
            }
        }
        Ok(Lexer { line, toks, pos: 0, end_col: chars.len() + 1 })
    }

    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(t, _)| t)
    }

    fn col(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end_col, |(_, c)| *c)
    }

    fn next(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).map(|(t, _)| t.clone());
        self.pos += 1;
        t
    }

    fn error(&self, msg: impl Into<String>) -> Error {
        err(self.line, self.col(), msg)
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(&Tok::Sym(c)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.error(format!("expected `{c}`")))
        }
    }

    fn ident(&mut self) -> Result<String> {
        match self.peek() {
            Some(Tok::Ident(s)) => {
                let s = s.clone();
                self.pos += 1;
                Ok(s)
            }
            _ => Err(self.error("expected a name")),
        }
    }

    fn int(&mut self) -> Result<BigInt> {
        let neg = self.eat('-');
        match self.next() {
            Some(Tok::Int(v)) => Ok(if neg { -v } else { v }),
            _ => {
                self.pos -= 1;
                Err(self.error("expected an integer"))
            }
        }
    }

    fn small_int(&mut self) -> Result<i64> {
        let col = self.col();
        let v = self.int()?;
        i64::try_from(v).map_err(|_| err(self.line, col, "integer out of range"))
    }

    fn done(&self) -> bool {
        self.pos >= self.toks.len()
    }

    fn finish(&self) -> Result<()> {
        if self.done() {
            Ok(())
        } else {
            Err(self.error("unexpected trailing input"))
        }
    }
}

/// One `coefficient * letters` summand of an expression; letters in written order.
#[derive(Clone, Debug)]
struct Term {
    coeff: Coefficient,
    letters: Vec<(usize, i64)>,
    col: usize,
}

struct ExprParser<'a> {
    ctx: &'a ParamContext,
    gens: &'a [String],
}

impl ExprParser<'_> {
    fn expr(&self, lx: &mut Lexer) -> Result<Vec<Term>> {
        let mut terms = Vec::new();
        let mut negative = lx.eat('-');
        if !negative {
            lx.eat('+');
        }
        loop {
            let mut t = self.term(lx)?;
            if negative {
                t.coeff = -t.coeff;
            }
            terms.push(t);
            if lx.eat('+') {
                negative = false;
            } else if lx.eat('-') {
                negative = true;
            } else {
                return Ok(terms);
            }
        }
    }

    fn term(&self, lx: &mut Lexer) -> Result<Term> {
        let col = lx.col();
        let mut coeff = self.ctx.one();
        let mut letters = Vec::new();
        loop {
            match lx.peek() {
                Some(Tok::Int(_)) => {
                    let v = lx.int()?;
                    coeff = &coeff * &Coefficient::constant(self.ctx.len(), v);
                }
                Some(Tok::Sym('(')) => {
                    lx.next();
                    let inner = self.coeff_expr(lx)?;
                    lx.expect(')')?;
                    coeff = &coeff * &inner;
                }
                Some(Tok::Ident(name)) => {
                    let name = name.clone();
                    let at = lx.col();
                    lx.next();
                    let power = if lx.eat('^') { lx.small_int()? } else { 1 };
                    if let Some(g) = self.gens.iter().position(|x| *x == name) {
                        letters.push((g, power));
                    } else if self.ctx.index_of(&name).is_some() {
                        let s = self.ctx.symbol(&name)?;
                        coeff = &coeff * &s.pow(power)?;
                    } else {
                        return Err(err(lx.line, at, format!("unknown name `{name}`")));
                    }
                }
                _ => return Err(lx.error("expected a term")),
            }
            if !lx.eat('*') {
                return Ok(Term { coeff, letters, col });
            }
        }
    }

    /// A parenthesized coefficient: sums of products of integers and symbols.
    fn coeff_expr(&self, lx: &mut Lexer) -> Result<Coefficient> {
        let col = lx.col();
        let mut total = Coefficient::zero();
        for t in self.expr(lx)? {
            if !t.letters.is_empty() {
                return Err(err(lx.line, col, "generators are not allowed inside parentheses"));
            }
            total = &total + &t.coeff;
        }
        Ok(total)
    }
}

/// Parsed source: either an explicit presentation or a constructor call.
#[derive(Clone, Debug)]
pub enum Source {
    Explicit(Presentation),
    Zoo(ZooCall),
}

impl Source {
    pub fn build(&self) -> Result<Algebra> {
        match self {
            Source::Explicit(p) => Ok(Algebra { presentation: p.clone(), matrix_params: None, zoo: None }),
            Source::Zoo(call) => call.build(),
        }
    }
}

fn strip_comment(line: &str) -> &str {
    line.split('#').next().unwrap_or("")
}

fn parse_zoo(line: usize, text: &str) -> Result<ZooCall> {
    let mut lx = Lexer::new(line, text)?;
    lx.ident()?; // `use`
    let col = lx.col();
    let fname = lx.ident()?;
    let family = Family::ALL
        .iter()
        .find(|(n, _)| *n == fname)
        .map(|(_, f)| *f)
        .ok_or_else(|| err(line, col, format!("unknown family `{fname}`")))?;
    let mut call = ZooCall { family, n: 0, m: None, single: None };
    let mut have_n = false;
    lx.expect('(')?;
    if !lx.eat(')') {
        loop {
            let kcol = lx.col();
            let key = lx.ident()?;
            lx.expect('=')?;
            match key.as_str() {
                "n" | "m" => {
                    let vcol = lx.col();
                    let v = usize::try_from(lx.int()?).map_err(|_| err(line, vcol, "expected a size"))?;
                    if key == "n" {
                        call.n = v;
                        have_n = true;
                    } else {
                        call.m = Some(v);
                    }
                }
                "single" => call.single = Some(lx.ident()?),
                _ => return Err(err(line, kcol, format!("unknown key `{key}`"))),
            }
            if lx.eat(')') {
                break;
            }
            lx.expect(',')?;
        }
    }
    lx.finish()?;
    if !have_n {
        return Err(err(line, col, "missing `n`"));
    }
    Ok(call)
}

#[derive(PartialEq)]
enum Section {
    Header,
    Rules,
    Weights,
}

/// Parses a presentation file or a `use` line.
pub fn parse(source: &str) -> Result<Source> {
    let lines: Vec<(usize, &str)> = source
        .lines()
        .enumerate()
        .map(|(k, l)| (k + 1, strip_comment(l)))
        .filter(|(_, l)| !l.trim().is_empty())
        .collect();
    let Some(&(first_no, first)) = lines.first() else {
        return Err(err(1, 1, "empty source"));
    };
    if first.trim_start().starts_with("use ") || first.trim() == "use" {
        if let Some(&(no, _)) = lines.get(1) {
            return Err(err(no, 1, "nothing may follow a `use` line"));
        }
        return parse_zoo(first_no, first).map(Source::Zoo);
    }

    let mut name = None;
    let mut ctx: Option<Arc<ParamContext>> = None;
    let mut builder: Option<PresentationBuilder> = None;
    let mut section = Section::Header;
    let mut weights: Vec<Option<Vec<i64>>> = Vec::new();
    let mut rank: Option<usize> = None;

    for &(no, text) in &lines {
        let mut words = text.split_whitespace();
        let keyword = words.next().unwrap_or("");
        let col_of = |w: &str| text.find(w).map_or(1, |c| text[..c].chars().count() + 1);
        match (keyword, &section) {
            ("algebra", Section::Header) => {
                let n = words.next().ok_or_else(|| err(no, text.len() + 1, "expected a name"))?;
                if let Some(extra) = words.next() {
                    return Err(err(no, col_of(extra), "unexpected trailing input"));
                }
                name = Some(n.to_string());
            }
            ("params", Section::Header) => {
                if name.is_none() {
                    return Err(err(no, 1, "expected `algebra` first"));
                }
                if ctx.is_some() {
                    return Err(err(no, 1, "`params` given twice"));
                }
                let syms: Vec<&str> = words.collect();
                let c = ParamContext::new(syms.iter().copied()).map_err(|e| err(no, 1, e.to_string()))?;
                ctx = Some(Arc::new(c));
            }
            ("generators", Section::Header) => {
                let Some(c) = &ctx else {
                    return Err(err(no, 1, "expected `params` before `generators`"));
                };
                let b = builder.get_or_insert_with(|| PresentationBuilder::new(name.clone().unwrap(), c.clone()));
                let mut names: Vec<&str> = words.collect();
                let kind = if names.last() == Some(&"invertible") {
                    names.pop();
                    GeneratorKind::Invertible
                } else {
                    GeneratorKind::Polynomial
                };
                if names.is_empty() {
                    return Err(err(no, text.len() + 1, "expected generator names"));
                }
                for g in names {
                    b.generator(g, kind).map_err(|e| err(no, col_of(g), e.to_string()))?;
                }
            }
            ("rules", Section::Header) => section = Section::Rules,
            ("weights", Section::Header | Section::Rules) => section = Section::Weights,
            (_, Section::Rules) => {
                let b = builder.as_mut().ok_or_else(|| err(no, 1, "no generators declared"))?;
                parse_rule(no, text, b)?;
            }
            (_, Section::Weights) => {
                let b = builder.as_ref().ok_or_else(|| err(no, 1, "no generators declared"))?;
                if weights.is_empty() {
                    weights = vec![None; b.ngens()];
                }
                let mut lx = Lexer::new(no, text)?;
                let gcol = lx.col();
                let g = lx.ident()?;
                let idx = b.generator_index(&g).ok_or_else(|| err(no, gcol, format!("unknown generator `{g}`")))?;
                lx.expect('=')?;
                lx.expect('(')?;
                let mut w = Vec::new();
                if !lx.eat(')') {
                    loop {
                        w.push(lx.small_int()?);
                        if lx.eat(')') {
                            break;
                        }
                        lx.expect(',')?;
                    }
                }
                lx.finish()?;
                match rank {
                    Some(r) if r != w.len() => {
                        return Err(err(no, gcol, format!("weight has length {} but rank is {r}", w.len())))
                    }
                    _ => rank = Some(w.len()),
                }
                if weights[idx].replace(w).is_some() {
                    return Err(err(no, gcol, format!("weight of `{g}` given twice")));
                }
            }
            _ => return Err(err(no, col_of(keyword), format!("unexpected `{keyword}`"))),
        }
    }

    let last = lines.last().map_or(1, |(n, _)| *n);
    let mut b = match builder {
        Some(b) => b,
        None => {
            let Some(name) = name else { return Err(err(first_no, 1, "expected `algebra`")) };
            let c = ctx.ok_or_else(|| err(last, 1, "missing `params`"))?;
            PresentationBuilder::new(name, c)
        }
    };
    if let Some(r) = rank {
        let mut ws = Vec::with_capacity(weights.len());
        for (g, w) in weights.into_iter().enumerate() {
            ws.push(w.ok_or_else(|| err(last, 1, format!("missing weight for generator {}", g + 1)))?);
        }
        b.weights(r, ws);
    }
    b.build().map(Source::Explicit).map_err(|e| match e {
        Error::Parse { .. } => e,
        other => err(last, 1, other.to_string()),
    })
}

fn parse_rule(no: usize, text: &str, b: &mut PresentationBuilder) -> Result<()> {
    let mut lx = Lexer::new(no, text)?;
    let lcol = lx.col();
    let gj = lx.ident()?;
    lx.expect('*')?;
    let gi_col = lx.col();
    let gi = lx.ident()?;
    lx.expect('=')?;
    let j = b.generator_index(&gj).ok_or_else(|| err(no, lcol, format!("unknown generator `{gj}`")))?;
    let i = b.generator_index(&gi).ok_or_else(|| err(no, gi_col, format!("unknown generator `{gi}`")))?;
    if j <= i {
        return Err(err(no, lcol, format!("rule `{gj}*{gi}` is not a descending pair")));
    }
    if b.has_rule(j, i) {
        return Err(err(no, lcol, format!("rule `{gj}*{gi}` given twice")));
    }
    let all = b.generator_names().to_vec();
    let ctx = b.context().clone();
    let parser = ExprParser { ctx: &ctx, gens: &all };
    let terms = parser.expr(&mut lx)?;
    lx.finish()?;
    let n = b.ngens();
    let mut rhs = Element::zero();
    for t in terms {
        let mono = pbw_monomial(n, &t.letters).ok_or_else(|| err(no, t.col, "term is not an ordered monomial"))?;
        rhs.add_term(mono, t.coeff);
    }
    let mut swap_mono = vec![0; n];
    swap_mono[i] += 1;
    swap_mono[j] += 1;
    let swap = rhs
        .coefficient(&swap_mono)
        .cloned()
        .ok_or_else(|| err(no, lcol, format!("missing the `{gi}*{gj}` term")))?;
    let tail = rhs.sub(&Element::monomial(swap_mono, swap.clone()));
    b.set_rule_coeff(j, i, &swap, tail).map_err(|e| err(no, lcol, e.to_string()))
}

/// Letters in nondecreasing generator order with nonnegative powers.
fn pbw_monomial(n: usize, letters: &[(usize, i64)]) -> Option<Monomial> {
    let mut m = vec![0i32; n];
    let mut last = 0;
    for &(g, k) in letters {
        if g < last || k < 0 {
            return None;
        }
        m[g] += i32::try_from(k).ok()?;
        last = g;
    }
    Some(m)
}

/// Parses and normalizes an expression such as `x2*x1 - q*x1^2` in `p`.
pub fn parse_element(p: &Presentation, text: &str) -> Result<Element> {
    let mut lx = Lexer::new(1, text)?;
    let parser = ExprParser { ctx: p.context(), gens: p.generators() };
    let terms = parser.expr(&mut lx)?;
    lx.finish()?;
    let mut out = Element::zero();
    for t in terms {
        let mut letters = Vec::new();
        for (g, k) in t.letters {
            let letter = if k < 0 { Letter::inverse(g) } else { Letter::new(g) };
            letters.extend(std::iter::repeat_n(letter, k.unsigned_abs() as usize));
        }
        let word = Word { scalar: t.coeff, letters };
        out = out.add(&normal_form(p, &word)?);
    }
    Ok(out)
}

/// Parses a coefficient expression over a context.
pub fn parse_coefficient(ctx: &ParamContext, text: &str) -> Result<Coefficient> {
    let mut lx = Lexer::new(1, text)?;
    let parser = ExprParser { ctx, gens: &[] };
    let mut total = Coefficient::zero();
    for t in parser.expr(&mut lx)? {
        total = &total + &t.coeff;
    }
    lx.finish()?;
    Ok(total)
}

pub fn format_monomial(p: &Presentation, m: &[i32]) -> String {
    let parts: Vec<String> = m
        .iter()
        .enumerate()
        .filter(|(_, &e)| e != 0)
        .map(|(g, &e)| {
            let name = &p.generators()[g];
            if e == 1 {
                name.clone()
            } else {
                format!("{name}^{e}")
            }
        })
        .collect();
    if parts.is_empty() {
        "1".into()
    } else {
        parts.join("*")
    }
}

/// Formats an element as `c1*m1 + c2*m2 ...`, readable back by `parse_element`.
pub fn format_element(p: &Presentation, a: &Element) -> String {
    if a.is_zero() {
        return "0".into();
    }
    let mut out = String::new();
    for (k, (m, c)) in a.terms().enumerate() {
        let mono = format_monomial(p, m);
        let shown = p.context().display(c).to_string();
        let (negative, body) = if c.len() == 1 {
            match shown.strip_prefix('-') {
                Some(rest) => (true, rest.to_string()),
                None => (false, shown),
            }
        } else {
            (false, format!("({shown})"))
        };
        if k == 0 {
            if negative {
                out.push('-');
            }
        } else {
            out.push_str(if negative { " - " } else { " + " });
        }
        match (body.as_str(), mono.as_str()) {
            (_, "1") => out.push_str(&body),
            ("1", _) => out.push_str(&mono),
            _ => {
                let _ = write!(out, "{body}*{mono}");
            }
        }
    }
    out
}

/// Writes any presentation back out in the explicit format.
pub fn print(p: &Presentation) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "algebra {}", p.name());
    let syms = p.context().symbols();
    if syms.is_empty() {
        out.push_str("params\n");
    } else {
        let _ = writeln!(out, "params {}", syms.join(" "));
    }
    let mut k = 0;
    while k < p.ngens() {
        let kind = p.kind(k);
        let run: Vec<&str> = (k..p.ngens()).take_while(|&g| p.kind(g) == kind).map(|g| p.generators()[g].as_str()).collect();
        k += run.len();
        let suffix = if kind == GeneratorKind::Invertible { " invertible" } else { "" };
        let _ = writeln!(out, "generators {}{suffix}", run.join(" "));
    }
    if p.ngens() > 1 {
        out.push_str("rules\n");
        for (j, i, rule) in p.rules() {
            let mut mono = vec![0; p.ngens()];
            mono[i] += 1;
            mono[j] += 1;
            let rhs = Element::monomial(mono, rule.swap.to_coefficient()).add(&rule.tail);
            let _ = writeln!(out, "{}*{} = {}", p.generators()[j], p.generators()[i], format_element(p, &rhs));
        }
    }
    if p.rank() > 0 {
        out.push_str("weights\n");
        for (g, w) in p.weights().iter().enumerate() {
            let parts: Vec<String> = w.iter().map(i64::to_string).collect();
            let _ = writeln!(out, "{} = ({})", p.generators()[g], parts.join(", "));
        }
    }
    out
}
