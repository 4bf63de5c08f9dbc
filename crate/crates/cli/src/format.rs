//! The presentation file format. See `docs/format.md` for the grammar.
//!
//! ```text
//! space e1 e2
//! ring Q
//! product dot
//!   e1 e1 -> e1
//!   e1 e2 -> e2
//! coproduct delta
//!   e2 -> e2 (x) e2
//! map D
//!   e2 -> e2
//! ```

use std::collections::BTreeSet;
use std::fmt;

use novikov_core::structures::{Presentation, Space};
use novikov_core::{BinOp, CoOp, LinMap, Poly, Ring, Tensor};

use crate::scalar::{coefficient, join_terms, parse_scalar};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.line == 0 {
            write!(f, "{}", self.message)
        } else {
            write!(f, "line {}: {}", self.line, self.message)
        }
    }
}

impl std::error::Error for ParseError {}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Kind {
    Product,
    Coproduct,
    Map,
    Form,
    Relement,
}

impl Kind {
    fn keyword(self) -> &'static str {
        match self {
            Kind::Product => "product",
            Kind::Coproduct => "coproduct",
            Kind::Map => "map",
            Kind::Form => "form",
            Kind::Relement => "relement",
        }
    }

    fn from_keyword(w: &str) -> Option<Kind> {
        Some(match w {
            "product" => Kind::Product,
            "coproduct" => Kind::Coproduct,
            "map" => Kind::Map,
            "form" => Kind::Form,
            "relement" => Kind::Relement,
            _ => return None,
        })
    }

    /// Basis names left of `->`.
    fn arity(self) -> usize {
        match self {
            Kind::Coproduct | Kind::Map => 1,
            _ => 2,
        }
    }
}

struct Section {
    kind: Kind,
    name: String,
    line: usize,
    tensor: Tensor,
    seen: BTreeSet<Vec<usize>>,
}

/// Letters, digits and `_`, starting with a letter, then optional `*`s.
fn valid_name(s: &str) -> bool {
    let core = s.trim_end_matches('*');
    let mut cs = core.chars();
    cs.next().is_some_and(|c| c.is_ascii_alphabetic()) && cs.all(|c| c.is_ascii_alphanumeric() || c == '_') && s != "q"
}

struct Ctx<'a> {
    space: &'a Space,
    /// Longest first, so `e1*` wins over `e1`.
    by_length: Vec<(usize, &'a str)>,
    line: usize,
}

impl<'a> Ctx<'a> {
    fn new(space: &'a Space) -> Self {
        let mut by_length: Vec<(usize, &str)> =
            space.names().iter().enumerate().map(|(i, n)| (i, n.as_str())).collect();
        by_length.sort_by_key(|(_, n)| std::cmp::Reverse(n.len()));
        Ctx { space, by_length, line: 0 }
    }

    fn err(&self, message: impl Into<String>) -> ParseError {
        ParseError { line: self.line, message: message.into() }
    }

    fn index(&self, name: &str) -> Result<usize, ParseError> {
        self.space.index(name).ok_or_else(|| self.err(format!("unknown basis name `{name}`")))
    }

    fn scalar(&self, s: &str) -> Result<Poly, ParseError> {
        parse_scalar(s).map_err(|e| self.err(e))
    }

    /// `[coefficient *] name`, the name being the longest declared one that ends the text.
    fn scaled_name(&self, body: &str) -> Result<(Poly, usize), ParseError> {
        let body = body.trim();
        for &(i, n) in &self.by_length {
            if let Some(pre) = body.strip_suffix(n) {
                let pre = pre.trim_end();
                if pre.is_empty() {
                    return Ok((Poly::one(), i));
                }
                if let Some(c) = pre.strip_suffix('*') {
                    return Ok((self.scalar(c)?, i));
                }
            }
        }
        let tail: String = body
            .chars()
            .rev()
            .take_while(|c| c.is_ascii_alphanumeric() || *c == '_' || *c == '*')
            .collect::<Vec<_>>()
            .into_iter()
            .rev()
            .collect();
        let tail = tail.trim_start_matches(|c: char| c.is_ascii_digit() || c == '*');
        if tail.is_empty() || tail == "q" {
            Err(self.err(format!("expected a basis vector in `{body}`")))
        } else {
            Err(self.err(format!("unknown basis name `{tail}`")))
        }
    }

    /// A sum of `rank` tensor products of basis vectors, as sparse entries.
    fn sum(&self, text: &str, rank: usize) -> Result<Vec<(Vec<usize>, Poly)>, ParseError> {
        let text = text.trim();
        if text == "0" {
            return Ok(Vec::new());
        }
        let mut out: Vec<(Vec<usize>, Poly)> = Vec::new();
        for (neg, term) in split_terms(text).map_err(|e| self.err(e))? {
            let factors: Vec<&str> = term.split("(x)").flat_map(|f| f.split('⊗')).collect();
            if factors.len() != rank {
                return Err(self.err(format!("`{}` should be a product of {rank} basis vectors", term.trim())));
            }
            let (mut c, first) = self.scaled_name(factors[0])?;
            let mut idx = vec![first];
            for f in &factors[1..] {
                idx.push(self.index(f.trim())?);
            }
            if neg {
                c = -c;
            }
            if out.iter().any(|(i, _)| *i == idx) {
                return Err(self.err(format!("term `{}` appears twice", term.trim())));
            }
            out.push((idx, c));
        }
        Ok(out)
    }
}

/// Splits at top-level `+` and `-`; signs in front of a term are folded into it.
fn split_terms(text: &str) -> Result<Vec<(bool, String)>, String> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut neg = false;
    let mut cur = String::new();
    for ch in text.chars() {
        match ch {
            '(' => depth += 1,
            ')' => depth -= 1,
            _ => {}
        }
        if depth < 0 {
            return Err(format!("unbalanced parentheses in `{text}`"));
        }
        if depth == 0 && (ch == '+' || ch == '-') {
            if cur.trim().is_empty() {
                if ch == '-' {
                    neg = !neg;
                }
                cur.clear();
            } else {
                out.push((neg, std::mem::take(&mut cur)));
                neg = ch == '-';
            }
            continue;
        }
        cur.push(ch);
    }
    if depth != 0 {
        return Err(format!("unbalanced parentheses in `{text}`"));
    }
    if cur.trim().is_empty() {
        return Err(format!("`{text}` ends with a sign"));
    }
    out.push((neg, cur));
    Ok(out)
}

/// Parses a presentation file.
pub fn parse(text: &str) -> Result<Presentation, ParseError> {
    let mut space: Option<Space> = None;
    let mut ring: Option<Ring> = None;
    let mut sections: Vec<Section> = Vec::new();
    let mut names: BTreeSet<String> = BTreeSet::new();
    for (k, raw) in text.lines().enumerate() {
        let line = k + 1;
        let err = |m: String| ParseError { line, message: m };
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        if let Some((lhs, rhs)) = content.split_once("->") {
            let sp = space.as_ref().ok_or_else(|| err("entry before `space`".into()))?;
            let sec = sections.last_mut().ok_or_else(|| err("entry outside a section".into()))?;
            let mut ctx = Ctx::new(sp);
            ctx.line = line;
            let ins: Vec<&str> = lhs.split_whitespace().collect();
            if ins.len() != sec.kind.arity() {
                return Err(err(format!(
                    "a {} entry takes {} basis name(s) before `->`",
                    sec.kind.keyword(),
                    sec.kind.arity()
                )));
            }
            let ins: Vec<usize> = ins.iter().map(|n| ctx.index(n)).collect::<Result<_, _>>()?;
            if !sec.seen.insert(ins.clone()) {
                return Err(err(format!("duplicate entry `{}` in {} `{}`", lhs.trim(), sec.kind.keyword(), sec.name)));
            }
            match sec.kind {
                Kind::Product | Kind::Map | Kind::Coproduct => {
                    let rank = if sec.kind == Kind::Coproduct { 2 } else { 1 };
                    for (outs, c) in ctx.sum(rhs, rank)? {
                        // products and coproducts store [inputs, outputs]; maps store [output, input]
                        let idx: Vec<usize> = if sec.kind == Kind::Map {
                            vec![outs[0], ins[0]]
                        } else {
                            ins.iter().chain(&outs).copied().collect()
                        };
                        sec.tensor.set(&idx, c);
                    }
                }
                Kind::Form | Kind::Relement => sec.tensor.set(&ins, ctx.scalar(rhs)?),
            }
            continue;
        }
        let mut words = content.split_whitespace();
        let head = words.next().unwrap_or_default();
        let rest: Vec<&str> = words.collect();
        match head {
            "space" => {
                if space.is_some() {
                    return Err(err("`space` declared twice".into()));
                }
                let names: Vec<String> = match rest.as_slice() {
                    [n] if n.chars().all(|c| c.is_ascii_digit()) => {
                        let n: usize = n.parse().map_err(|_| err(format!("bad dimension `{n}`")))?;
                        (1..=n).map(|i| format!("e{i}")).collect()
                    }
                    _ => rest.iter().map(|s| s.to_string()).collect(),
                };
                for n in &names {
                    if n == "q" {
                        return Err(err("`q` is reserved for the parameter and cannot name a basis vector".into()));
                    }
                    if !valid_name(n) {
                        return Err(err(format!("invalid basis name `{n}`")));
                    }
                }
                space = Some(Space::new(names).map_err(|e| err(e.to_string()))?);
            }
            "ring" => {
                if ring.is_some() {
                    return Err(err("`ring` declared twice".into()));
                }
                ring = Some(match rest.as_slice() {
                    ["Q"] => Ring::Rational,
                    ["Q[q]"] => Ring::Poly,
                    _ => return Err(err("ring must be `Q` or `Q[q]`".into())),
                });
            }
            w => {
                let kind = Kind::from_keyword(w).ok_or_else(|| err(format!("unknown section `{w}`")))?;
                let sp = space.as_ref().ok_or_else(|| err(format!("`{w}` before `space`")))?;
                let [name] = rest.as_slice() else {
                    return Err(err(format!("`{w}` takes exactly one name")));
                };
                if !valid_name(name) {
                    return Err(err(format!("invalid component name `{name}`")));
                }
                if !names.insert(name.to_string()) {
                    return Err(err(format!("component `{name}` declared twice")));
                }
                let n = sp.dim();
                let dims = vec![n; if matches!(kind, Kind::Form | Kind::Relement | Kind::Map) { 2 } else { 3 }];
                sections.push(Section {
                    kind,
                    name: name.to_string(),
                    line,
                    tensor: Tensor::zeros(&dims),
                    seen: BTreeSet::new(),
                });
            }
        }
    }
    let space = space.ok_or(ParseError { line: 0, message: "missing `space`".into() })?;
    let ring = ring.unwrap_or(Ring::Rational);
    let mut p = Presentation::new(space, ring);
    for s in sections {
        if ring == Ring::Rational && s.tensor.max_degree().unwrap_or(0) > 0 {
            return Err(ParseError {
                line: s.line,
                message: format!("`{}` uses q but the ring is `Q`; declare `ring Q[q]`", s.name),
            });
        }
        let fail = |e: novikov_core::Error| ParseError { line: s.line, message: e.to_string() };
        p = match s.kind {
            Kind::Product => p.with_product(&s.name, BinOp::from_tensor(s.tensor).map_err(fail)?),
            Kind::Coproduct => p.with_coproduct(&s.name, CoOp::from_tensor(s.tensor).map_err(fail)?),
            Kind::Map => p.with_map(&s.name, LinMap::from_tensor(s.tensor).map_err(fail)?),
            Kind::Form => p.with_form(&s.name, s.tensor),
            Kind::Relement => p.with_relement(&s.name, s.tensor),
        };
    }
    Ok(p)
}

/// Renders `Σ c·x` over sparse `(index, coefficient)` pairs, each index a tuple of basis positions.
pub fn render_sum(space: &Space, terms: &[(Vec<usize>, Poly)]) -> String {
    let parts: Vec<(bool, String)> = terms
        .iter()
        .filter(|(_, c)| !c.is_zero())
        .map(|(ix, c)| {
            let (neg, coef) = coefficient(c);
            let names: Vec<&str> = ix.iter().map(|&i| space.name(i)).collect();
            (neg, format!("{coef}{}", names.join(" (x) ")))
        })
        .collect();
    join_terms(&parts)
}

/// Index tails with their coefficients.
type Terms = Vec<(Vec<usize>, Poly)>;

/// Canonical text: sections grouped by kind, names sorted, entries sorted by index.
pub fn emit(p: &Presentation) -> String {
    let sp = &p.space;
    let mut out = format!("space {}\nring {}\n", sp.names().join(" "), if p.ring == Ring::Poly { "Q[q]" } else { "Q" });
    let grouped = |t: &Tensor, split: usize| {
        // entries keyed by their first `split` indices, in row-major order
        let mut rows: Vec<(Vec<usize>, Terms)> = Vec::new();
        for (ix, v) in t.nonzeros() {
            let (head, tail) = ix.split_at(split);
            match rows.last_mut() {
                Some((h, list)) if h.as_slice() == head => list.push((tail.to_vec(), v.clone())),
                _ => rows.push((head.to_vec(), vec![(tail.to_vec(), v.clone())])),
            }
        }
        rows
    };
    let names = |ix: &[usize]| ix.iter().map(|&i| sp.name(i)).collect::<Vec<_>>().join(" ");
    for (name, op) in &p.products {
        out.push_str(&format!("product {name}\n"));
        for (head, list) in grouped(op.tensor(), 2) {
            out.push_str(&format!("  {} -> {}\n", names(&head), render_sum(sp, &list)));
        }
    }
    for (name, co) in &p.coproducts {
        out.push_str(&format!("coproduct {name}\n"));
        for (head, list) in grouped(co.tensor(), 1) {
            out.push_str(&format!("  {} -> {}\n", names(&head), render_sum(sp, &list)));
        }
    }
    for (name, m) in &p.maps {
        out.push_str(&format!("map {name}\n"));
        let t = m.tensor().permute(&[1, 0]).expect("maps are matrices");
        for (head, list) in grouped(&t, 1) {
            out.push_str(&format!("  {} -> {}\n", names(&head), render_sum(sp, &list)));
        }
    }
    for (kind, list) in [("form", &p.forms), ("relement", &p.relements)] {
        for (name, t) in list {
            out.push_str(&format!("{kind} {name}\n"));
            for (ix, v) in t.nonzeros() {
                out.push_str(&format!("  {} -> {v}\n", names(&ix)));
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use novikov_core::fixtures;

    const EXNOV1: &str = "space e1 e2\nring Q\nproduct dot\n  e1 e1 -> e1\n  e1 e2 -> e2\n  e2 e1 -> e2\n\
                          coproduct delta\n  e2 -> e2 (x) e2\nmap D\n  e2 -> e2\nmap Q\n  e1 -> e1\n";

    #[test]
    fn parses_the_two_dimensional_example() {
        let p = parse(EXNOV1).unwrap();
        assert_eq!(p, fixtures::exnov1());
        assert_eq!(emit(&p), EXNOV1);
    }

    #[test]
    fn empty_product_is_zero() {
        let p = parse("space 2\nproduct circ\n").unwrap();
        assert_eq!(p.product("circ").unwrap(), &BinOp::zero(2));
    }

    #[test]
    fn unknown_name_reports_the_line() {
        let e = parse("space e1 e2\nproduct dot\n  e1 e3 -> e1\n").unwrap_err();
        assert_eq!(e.line, 3);
        assert!(e.message.contains("e3"), "{e}");
        let e = parse("space e1 e2\nproduct dot\n  e1 e2 -> 2*e1 + e7\n").unwrap_err();
        assert_eq!((e.line, e.message.as_str()), (3, "unknown basis name `e7`"));
    }

    #[test]
    fn rejections() {
        let cases = [
            ("space q e2\n", 1, "reserved"),
            ("space e1 e2\nproduct dot\n  e1 e1 -> e1\n  e1 e1 -> e2\n", 4, "duplicate entry"),
            ("space e1\nproduct dot\n  e1 e1 -> e1 + e1\n", 3, "twice"),
            ("space e1\nproduct dot\n  e1 e1 -> (1 + 2*e1\n", 3, "parenthes"),
            ("space e1\nproduct dot\n  e1 e1 -> 1/x*e1\n", 3, "scalar"),
            ("space e1\nproduct dot\n  e1 e1 -> q*e1\n", 2, "ring"),
            ("space e1\nring Z\n", 2, "ring"),
            ("space e1\nmap D\n  e1 e1 -> e1\n", 3, "basis name"),
            ("space e1\nwhatever x\n", 2, "unknown section"),
            ("space e1\nproduct a\nmap a\n", 3, "declared twice"),
            ("product a\n", 1, "before `space`"),
        ];
        for (text, line, needle) in cases {
            let e = parse(text).unwrap_err();
            assert_eq!(e.line, line, "{text}: {e}");
            assert!(e.message.contains(needle), "{text}: {e}");
        }
    }

    #[test]
    fn starred_names_and_polynomial_coefficients() {
        let text = "space e1 e1*\nring Q[q]\nproduct circ\n  e1 e1* -> 2*(1+3*q)*e1* - e1\n\
                    coproduct Delta\n  e1* -> -1/2*e1 (x) e1* + q*e1* ⊗ e1\nrelement r\n  e1 e1* -> 1 - q\n";
        let p = parse(text).unwrap();
        let c = p.product("circ").unwrap();
        assert_eq!(c.get(0, 1, 1), &Poly::from_ints(&[2, 6]));
        assert_eq!(c.get(0, 1, 0), &Poly::from_int(-1));
        let d = p.coproduct("Delta").unwrap();
        assert_eq!(d.get(1, 1, 0), &Poly::q());
        assert_eq!(parse(&emit(&p)).unwrap(), p);
    }
}
