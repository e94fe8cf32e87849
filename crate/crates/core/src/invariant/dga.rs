use crate::error::{Error, Result};
use crate::rational::{q, qf, CQ};
use std::collections::BTreeMap;
use std::fmt;

/// `t^t · g₁ ∧ g₂ ∧ …` with generators in index order.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial {
    pub t: i32,
    pub gens: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Generator {
    pub name: String,
    pub degree: usize,
    /// Index of the complex conjugate; itself for real generators.
    pub conj: usize,
}

/// Sum of monomials with complex rational coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Form {
    terms: BTreeMap<Monomial, CQ>,
}

impl Form {
    pub fn zero() -> Self {
        Form::default()
    }
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
    pub fn terms(&self) -> &BTreeMap<Monomial, CQ> {
        &self.terms
    }
    fn push(&mut self, m: Monomial, c: CQ) {
        if c.is_zero() {
            return;
        }
        let vanished = {
            let e = self.terms.entry(m.clone()).or_insert_with(CQ::zero);
            *e = &*e + &c;
            e.is_zero()
        };
        if vanished {
            self.terms.remove(&m);
        }
    }
    pub fn add(&self, o: &Form) -> Form {
        let mut r = self.clone();
        for (m, c) in &o.terms {
            r.push(m.clone(), c.clone());
        }
        r
    }
    pub fn sub(&self, o: &Form) -> Form {
        self.add(&o.scale(&CQ::from_int(-1, 0)))
    }
    pub fn scale(&self, s: &CQ) -> Form {
        let mut r = Form::zero();
        for (m, c) in &self.terms {
            r.push(m.clone(), c * s);
        }
        r
    }
    pub fn scale_q(&self, s: crate::rational::Q) -> Form {
        self.scale(&CQ::real(s))
    }
    /// Multiplies by `t^k`.
    pub fn shift_t(&self, k: i32) -> Form {
        Form { terms: self.terms.iter().map(|(m, c)| (Monomial { t: m.t + k, gens: m.gens.clone() }, c.clone())).collect() }
    }
}

/// Finitely generated graded-commutative algebra with a differential.
#[derive(Clone, Debug)]
pub struct FormalDGA {
    gens: Vec<Generator>,
    rules: Vec<Option<Form>>,
    relations: Vec<(Vec<usize>, Form)>,
    base_dim: Option<usize>,
    dt: Option<usize>,
    allow_t: bool,
}

/// Declarative description; `build` validates `d² = 0`.
#[derive(Clone, Debug, Default)]
pub struct DgaBuilder {
    gens: Vec<Generator>,
    rules: Vec<(String, String)>,
    relations: Vec<(Vec<String>, String)>,
    base_dim: Option<usize>,
    with_t: bool,
    allow_t: bool,
}

impl DgaBuilder {
    pub fn new() -> Self {
        Self::default()
    }
    pub fn real(mut self, name: &str, degree: usize) -> Self {
        let i = self.gens.len();
        self.gens.push(Generator { name: name.into(), degree, conj: i });
        self
    }
    /// A complex generator and its conjugate.
    pub fn complex(mut self, name: &str, conj_name: &str, degree: usize) -> Self {
        let i = self.gens.len();
        self.gens.push(Generator { name: name.into(), degree, conj: i + 1 });
        self.gens.push(Generator { name: conj_name.into(), degree, conj: i });
        self
    }
    /// Adds the coordinate `t` with generator `dt`.
    pub fn with_t(mut self) -> Self {
        self.with_t = true;
        self.allow_t = true;
        self
    }
    /// Allows powers of `t` as coefficients without a differential.
    pub fn t_coefficients(mut self) -> Self {
        self.allow_t = true;
        self
    }
    /// Forms built only from non-`dt` generators vanish above this degree.
    pub fn base_dim(mut self, n: usize) -> Self {
        self.base_dim = Some(n);
        self
    }
    /// `d(name) = expr`, with `expr` in the small expression language of [`FormalDGA::parse`].
    pub fn rule(mut self, name: &str, expr: &str) -> Self {
        self.rules.push((name.into(), expr.into()));
        self
    }
    /// `g₁ ∧ … ∧ g_k = expr`.
    pub fn relation(mut self, lhs: &[&str], expr: &str) -> Self {
        self.relations.push((lhs.iter().map(|s| s.to_string()).collect(), expr.into()));
        self
    }

    fn assemble(self) -> Result<FormalDGA> {
        let mut gens = self.gens;
        let dt = if self.with_t {
            let i = gens.len();
            gens.push(Generator { name: "dt".into(), degree: 1, conj: i });
            Some(i)
        } else {
            None
        };
        let n = gens.len();
        let mut a = FormalDGA { gens, rules: vec![None; n], relations: Vec::new(), base_dim: self.base_dim, dt, allow_t: self.allow_t };
        if let Some(i) = dt {
            a.rules[i] = Some(Form::zero());
        }
        for (lhs, rhs) in &self.relations {
            let idx: Vec<usize> = lhs.iter().map(|s| a.index(s)).collect::<Result<_>>()?;
            let mut sorted = idx.clone();
            sorted.sort_unstable();
            let r = a.parse(rhs)?;
            a.relations.push((sorted, r));
        }
        for (name, rhs) in &self.rules {
            let i = a.index(name)?;
            let f = a.parse(rhs)?;
            if let Some(d) = &f.terms.keys().map(|m| a.degree_of(m)).find(|&d| d != a.gens[i].degree + 1) {
                return Err(Error::Degree(format!("d({name}) has a term of degree {d}")));
            }
            a.rules[i] = Some(f);
        }
        Ok(a)
    }

    /// Builds and checks `d² = 0` on every generator.
    pub fn build(self) -> Result<FormalDGA> {
        let a = self.assemble()?;
        a.validate()?;
        Ok(a)
    }

    /// Builds without the `d² = 0` check, for obstruction reports.
    pub fn build_unchecked(self) -> Result<FormalDGA> {
        self.assemble()
    }
}

impl FormalDGA {
    pub fn generators(&self) -> &[Generator] {
        &self.gens
    }

    /// Generators on which `d²` does not vanish, with the value of `d²`.
    pub fn d_squared_defects(&self) -> Result<Vec<(String, Form)>> {
        let mut out = Vec::new();
        for i in 0..self.gens.len() {
            if self.rules[i].is_none() {
                continue;
            }
            let dd = self.d(&self.d(&self.generator(i))?)?;
            if !dd.is_zero() {
                out.push((self.gens[i].name.clone(), dd));
            }
        }
        Ok(out)
    }

    fn validate(&self) -> Result<()> {
        match self.d_squared_defects()?.into_iter().next() {
            Some((name, _)) => Err(Error::DifferentialSquare(name)),
            None => Ok(()),
        }
    }

    /// Replaces `d(name)` and re-validates `d² = 0`.
    pub fn with_rule(&self, name: &str, value: Form) -> Result<FormalDGA> {
        self.with_rules(vec![(name.to_string(), value)])
    }

    /// Replaces several rules at once, validating only the final state.
    pub fn with_rules(&self, rules: Vec<(String, Form)>) -> Result<FormalDGA> {
        let a = self.with_rules_unchecked(rules)?;
        a.validate()?;
        Ok(a)
    }

    pub fn with_rules_unchecked(&self, rules: Vec<(String, Form)>) -> Result<FormalDGA> {
        let mut a = self.clone();
        for (name, value) in rules {
            let i = a.index(&name)?;
            if let Some(d) = value.terms().keys().map(|m| a.degree_of(m)).find(|&d| d != a.gens[i].degree + 1) {
                return Err(Error::Degree(format!("d({name}) has a term of degree {d}")));
            }
            a.rules[i] = Some(value);
        }
        Ok(a)
    }

    pub fn rule(&self, name: &str) -> Result<Option<&Form>> {
        Ok(self.rules[self.index(name)?].as_ref())
    }

    pub fn index(&self, name: &str) -> Result<usize> {
        self.gens.iter().position(|g| g.name == name).ok_or_else(|| Error::UnknownGenerator(name.into()))
    }

    pub fn degree_of(&self, m: &Monomial) -> usize {
        m.gens.iter().map(|&g| self.gens[g].degree).sum()
    }

    pub fn generator(&self, i: usize) -> Form {
        let mut f = Form::zero();
        f.push(Monomial { t: 0, gens: vec![i] }, CQ::one());
        f
    }

    pub fn gen(&self, name: &str) -> Result<Form> {
        Ok(self.generator(self.index(name)?))
    }

    pub fn one(&self) -> Form {
        self.constant(CQ::one())
    }

    pub fn constant(&self, c: CQ) -> Form {
        let mut f = Form::zero();
        f.push(Monomial { t: 0, gens: Vec::new() }, c);
        f
    }

    /// `t^k`.
    pub fn t_power(&self, k: i32) -> Result<Form> {
        if !self.allow_t {
            return Err(Error::Unsupported("this algebra has no coordinate t".into()));
        }
        Ok(self.one().shift_t(k))
    }

    /// Sorts a generator word, returning the Koszul sign or `None` when it vanishes.
    fn normalize(&self, word: &[usize]) -> Option<(i64, Vec<usize>)> {
        let mut w = word.to_vec();
        let mut sign = 1i64;
        for i in 1..w.len() {
            let mut j = i;
            while j > 0 && w[j - 1] > w[j] {
                if self.gens[w[j - 1]].degree % 2 == 1 && self.gens[w[j]].degree % 2 == 1 {
                    sign = -sign;
                }
                w.swap(j - 1, j);
                j -= 1;
            }
        }
        if w.windows(2).any(|p| p[0] == p[1] && self.gens[p[0]].degree % 2 == 1) {
            return None;
        }
        Some((sign, w))
    }

    fn truncated(&self, m: &Monomial) -> bool {
        match self.base_dim {
            Some(n) => m.gens.iter().filter(|&&g| Some(g) != self.dt).map(|&g| self.gens[g].degree).sum::<usize>() > n,
            None => false,
        }
    }

    fn mul_raw(&self, a: &Form, b: &Form) -> Form {
        let mut out = Form::zero();
        for (ma, ca) in &a.terms {
            for (mb, cb) in &b.terms {
                let mut word = ma.gens.clone();
                word.extend(&mb.gens);
                if let Some((s, gens)) = self.normalize(&word) {
                    let m = Monomial { t: ma.t + mb.t, gens };
                    if !self.truncated(&m) {
                        out.push(m, (ca * cb).scale(&q(s)));
                    }
                }
            }
        }
        out
    }

    /// Applies relations until none match.
    pub fn reduce(&self, f: &Form) -> Form {
        let mut cur = f.clone();
        for _ in 0..64 {
            let mut changed = false;
            let mut next = Form::zero();
            for (m, c) in &cur.terms {
                if let Some((pat, rep)) = self.relations.iter().find(|(p, _)| contains(&m.gens, p)) {
                    let rest = remove(&m.gens, pat);
                    let mut joined = pat.clone();
                    joined.extend(&rest);
                    let (s, _) = self.normalize(&joined).expect("sub-word of a nonzero word");
                    let rest_form = Form { terms: BTreeMap::from([(Monomial { t: m.t, gens: rest }, c.scale(&q(s)))]) };
                    next = next.add(&self.mul_raw(rep, &rest_form));
                    changed = true;
                } else {
                    next.push(m.clone(), c.clone());
                }
            }
            cur = next;
            if !changed {
                return cur;
            }
        }
        panic!("relations do not terminate");
    }

    pub fn mul(&self, a: &Form, b: &Form) -> Form {
        self.reduce(&self.mul_raw(a, b))
    }

    pub fn wedge_all(&self, fs: &[&Form]) -> Form {
        fs.iter().fold(self.one(), |acc, f| self.mul(&acc, f))
    }

    /// Graded Leibniz extension of the declared rules, with `d(t^k) = k t^{k−1} dt`.
    pub fn d(&self, f: &Form) -> Result<Form> {
        let mut out = Form::zero();
        for (m, c) in &f.terms {
            let coeff = Form { terms: BTreeMap::from([(Monomial { t: 0, gens: Vec::new() }, c.clone())]) };
            if m.t != 0 {
                let dt = self.dt.ok_or_else(|| Error::Unsupported("t appears but dt is not declared".into()))?;
                let rest = Form { terms: BTreeMap::from([(Monomial { t: m.t - 1, gens: m.gens.clone() }, c.scale(&q(m.t as i64)))]) };
                out = out.add(&self.mul_raw(&self.generator(dt), &rest));
            }
            let mut sign = 1i64;
            for (k, &g) in m.gens.iter().enumerate() {
                let rule = self.rules[g].as_ref().ok_or_else(|| Error::UnknownGenerator(format!("no rule for d({})", self.gens[g].name)))?;
                let left = Form { terms: BTreeMap::from([(Monomial { t: m.t, gens: m.gens[..k].to_vec() }, CQ::one())]) };
                let right = Form { terms: BTreeMap::from([(Monomial { t: 0, gens: m.gens[k + 1..].to_vec() }, CQ::one())]) };
                let term = self.mul_raw(&self.mul_raw(&left, rule), &right);
                out = out.add(&self.mul_raw(&term, &coeff).scale_q(q(sign)));
                if self.gens[g].degree % 2 == 1 {
                    sign = -sign;
                }
            }
        }
        Ok(self.reduce(&out))
    }

    pub fn conj(&self, f: &Form) -> Form {
        let mut out = Form::zero();
        for (m, c) in &f.terms {
            let word: Vec<usize> = m.gens.iter().map(|&g| self.gens[g].conj).collect();
            if let Some((s, gens)) = self.normalize(&word) {
                out.push(Monomial { t: m.t, gens }, c.conj().scale(&q(s)));
            }
        }
        out
    }

    pub fn re(&self, f: &Form) -> Form {
        f.add(&self.conj(f)).scale_q(qf(1, 2))
    }

    pub fn im(&self, f: &Form) -> Form {
        // (f − f̄)/(2i) = −i (f − f̄)/2
        f.sub(&self.conj(f)).scale(&CQ::new(q(0), qf(-1, 2)))
    }

    /// Algebra map sending generator `i` to `images[i]`, keeping powers of `t`.
    pub fn map_into(&self, f: &Form, target: &FormalDGA, images: &[Option<Form>]) -> Result<Form> {
        let mut out = Form::zero();
        for (m, c) in &f.terms {
            let mut acc = target.constant(c.clone()).shift_t(m.t);
            for &g in &m.gens {
                let img = images[g].as_ref().ok_or_else(|| Error::UnknownGenerator(format!("no image for {}", self.gens[g].name)))?;
                acc = target.mul(&acc, img);
            }
            out = out.add(&acc);
        }
        Ok(target.reduce(&out))
    }

    /// Parses `3*psi+ - 2 sigma^sigma + (1/2)i t^4 a^b`: terms are `[coeff] [t^k] g1^g2^…`.
    pub fn parse(&self, s: &str) -> Result<Form> {
        super::parse::parse_form(self, s)
    }

    pub fn monomial(&self, t: i32, names: &[&str]) -> Result<Form> {
        let idx: Vec<usize> = names.iter().map(|n| self.index(n)).collect::<Result<_>>()?;
        let f = Form { terms: BTreeMap::from([(Monomial { t: 0, gens: Vec::new() }, CQ::one())]) }.shift_t(t);
        let word = Form { terms: BTreeMap::from([(Monomial { t: 0, gens: idx }, CQ::one())]) };
        Ok(self.mul_raw(&f, &word))
    }

    pub fn display(&self, f: &Form) -> String {
        DisplayForm { a: self, f }.to_string()
    }
}

fn contains(word: &[usize], pat: &[usize]) -> bool {
    let mut w = word.to_vec();
    for p in pat {
        match w.iter().position(|x| x == p) {
            Some(i) => {
                w.remove(i);
            }
            None => return false,
        }
    }
    true
}

fn remove(word: &[usize], pat: &[usize]) -> Vec<usize> {
    let mut w = word.to_vec();
    for p in pat {
        let i = w.iter().position(|x| x == p).expect("pattern present");
        w.remove(i);
    }
    w
}

struct DisplayForm<'a> {
    a: &'a FormalDGA,
    f: &'a Form,
}

impl fmt::Display for DisplayForm<'_> {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.f.is_zero() {
            return write!(out, "0");
        }
        let mut first = true;
        for (m, c) in &self.f.terms {
            if !first {
                write!(out, " + ")?;
            }
            first = false;
            write!(out, "({c})")?;
            if m.t != 0 {
                write!(out, " t^{}", m.t)?;
            }
            let names: Vec<&str> = m.gens.iter().map(|&g| self.a.gens[g].name.as_str()).collect();
            if !names.is_empty() {
                write!(out, " {}", names.join("^"))?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn nk() -> FormalDGA {
        crate::invariant::nearly_kahler_dga().unwrap()
    }

    #[test]
    fn leibniz_examples() {
        let a = nk();
        let raw = DgaBuilder::new()
            .real("sigma", 2)
            .real("psi_plus", 3)
            .real("psi_minus", 3)
            .rule("sigma", "3 psi_plus")
            .rule("psi_plus", "0")
            .rule("psi_minus", "-2 sigma^sigma")
            .build_unchecked()
            .unwrap();
        assert_eq!(raw.d(&raw.parse("sigma^sigma").unwrap()).unwrap(), raw.parse("6 psi_plus^sigma").unwrap());
        assert_eq!(a.d(&a.gen("psi_minus").unwrap()).unwrap(), a.parse("-2 sigma sigma").unwrap());
        assert_eq!(a.d(&a.parse("t^3 sigma").unwrap()).unwrap(), a.parse("3 t^2 dt^sigma + 3 t^3 psi_plus").unwrap());
    }

    #[test]
    fn graded_commutativity() {
        let a = nk();
        let x = a.parse("dt^psi_plus").unwrap();
        let y = a.parse("psi_plus^dt").unwrap();
        assert_eq!(x, y.scale(&CQ::from_int(-1, 0)));
        assert!(a.parse("psi_plus^psi_plus").unwrap().is_zero());
        assert_eq!(a.parse("sigma^dt").unwrap(), a.parse("dt^sigma").unwrap());
        // base dimension 6 kills σ⁴ but not dt∧σ³
        assert!(a.parse("sigma^sigma^sigma^sigma").unwrap().is_zero());
        assert!(!a.parse("dt^sigma^sigma^sigma").unwrap().is_zero());
    }

    #[test]
    fn errors() {
        let a = nk();
        assert_eq!(a.parse("3 omega"), Err(Error::UnknownGenerator("omega".into())));
        assert!(matches!(a.parse("3 * + sigma"), Err(Error::Parse { .. })));
        assert!(matches!(a.parse("sigma $"), Err(Error::Parse { column: 7, .. })));
        let bad = DgaBuilder::new().real("x", 1).real("y", 2).rule("x", "y").rule("y", "x^y").build();
        assert_eq!(bad.err(), Some(Error::DifferentialSquare("x".into())));
        let wrong_degree = DgaBuilder::new().real("x", 1).rule("x", "x").build();
        assert!(matches!(wrong_degree, Err(Error::Degree(_))));
        assert!(DgaBuilder::new().real("x", 1).build().unwrap().t_power(1).is_err());
    }

    #[test]
    fn conjugation_and_parts() {
        let a = DgaBuilder::new().complex("w", "wb", 1).real("x", 1).build_unchecked().unwrap();
        let f = a.parse("i w^wb + 2 x^w").unwrap();
        let back = a.conj(&a.conj(&f));
        assert_eq!(back, f);
        let recombined = a.re(&f).add(&a.im(&f).scale(&CQ::i()));
        assert_eq!(recombined, f);
        // i w∧w̄ is real
        let g = a.parse("i w^wb").unwrap();
        assert_eq!(a.conj(&g), g);
    }
}
