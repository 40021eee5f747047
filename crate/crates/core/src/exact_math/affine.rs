use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};
use serde::ser::{Serialize, SerializeMap, Serializer};

use super::rational::{format_rational, parse_rational, Rational};
use crate::error::{Error, Result};

/// The ordered list of symbolic parameters a computation is allowed to use.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ParamSpace {
    names: Vec<String>,
}

impl ParamSpace {
    pub fn new<S: AsRef<str>>(names: &[S]) -> Result<Self> {
        let mut out: Vec<String> = Vec::with_capacity(names.len());
        for n in names {
            let n = n.as_ref().trim();
            if !is_identifier(n) {
                return Err(Error::FormSyntax {
                    input: n.to_string(),
                    reason: "parameter names must be identifiers".into(),
                });
            }
            if out.iter().any(|m| m == n) {
                return Err(Error::DuplicateParameter(n.to_string()));
            }
            out.push(n.to_string());
        }
        Ok(ParamSpace { names: out })
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, index: usize) -> &str {
        &self.names[index]
    }

    pub fn index_of(&self, name: &str) -> Result<usize> {
        self.names
            .iter()
            .position(|n| n == name)
            .ok_or_else(|| Error::UnknownParameter(name.to_string()))
    }

    /// The form consisting of the single named parameter.
    pub fn param(&self, name: &str) -> Result<AffineForm> {
        Ok(AffineForm::param(self.index_of(name)?))
    }

    /// Turns a name → value map into a dense point, rejecting unknown names
    /// and requiring every declared parameter.
    pub fn bind(&self, values: &BTreeMap<String, Rational>) -> Result<Vec<Rational>> {
        for k in values.keys() {
            self.index_of(k)?;
        }
        self.names
            .iter()
            .map(|n| {
                values
                    .get(n)
                    .cloned()
                    .ok_or_else(|| Error::MissingBinding(n.clone()))
            })
            .collect()
    }

    /// Parses a degree-≤1 expression such as `2*a - 1/3*b + 1/2` or `3/2 c`.
    pub fn parse_form(&self, text: &str) -> Result<AffineForm> {
        let err = |reason: &str| Error::FormSyntax {
            input: text.to_string(),
            reason: reason.to_string(),
        };
        let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(err("empty expression"));
        }
        let mut terms: Vec<(bool, String)> = Vec::new();
        let mut current = String::new();
        let mut negative = false;
        for (i, ch) in compact.chars().enumerate() {
            if ch == '+' || ch == '-' {
                if i == 0 || !current.is_empty() {
                    if !current.is_empty() {
                        terms.push((negative, std::mem::take(&mut current)));
                    }
                    negative = ch == '-';
                    continue;
                }
                return Err(err("dangling sign"));
            }
            current.push(ch);
        }
        if current.is_empty() {
            return Err(err("trailing sign"));
        }
        terms.push((negative, current));

        let mut form = AffineForm::zero();
        for (neg, term) in terms {
            let (coef, name) = split_term(&term).ok_or_else(|| err("malformed term"))?;
            let coef = match coef {
                Some(c) => parse_rational(c).map_err(|_| err("malformed coefficient"))?,
                None => Rational::one(),
            };
            let coef = if neg { -coef } else { coef };
            let part = match name {
                Some(n) => AffineForm::param(self.index_of(n)?).scale(&coef),
                None => AffineForm::constant(coef),
            };
            form = form + part;
        }
        Ok(form)
    }
}

fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic() || c == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

/// Splits `3/2*a`, `3/2a`, `a`, `7` into (coefficient, name). `a/3` is
/// rejected.
fn split_term(term: &str) -> Option<(Option<&str>, Option<&str>)> {
    if let Some((c, n)) = term.split_once('*') {
        return is_identifier(n).then_some((Some(c), Some(n)));
    }
    let letter = term.find(|c: char| c.is_ascii_alphabetic() || c == '_');
    match letter {
        None => Some((Some(term), None)),
        Some(0) => is_identifier(term).then_some((None, Some(term))),
        Some(i) => {
            let (c, n) = term.split_at(i);
            is_identifier(n).then_some((Some(c), Some(n)))
        }
    }
}

/// A polynomial of degree at most one in the parameters of a [`ParamSpace`],
/// keyed by parameter index. Zero coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct AffineForm {
    constant: Rational,
    coeffs: BTreeMap<usize, Rational>,
}

impl AffineForm {
    pub fn zero() -> Self {
        AffineForm::default()
    }

    pub fn constant(c: Rational) -> Self {
        AffineForm {
            constant: c,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn param(index: usize) -> Self {
        let mut coeffs = BTreeMap::new();
        coeffs.insert(index, Rational::one());
        AffineForm {
            constant: Rational::zero(),
            coeffs,
        }
    }

    /// Builds `constant + Σ coeffs[i]·p_i` from a dense coefficient list.
    pub fn from_parts(constant: Rational, coeffs: &[Rational]) -> Self {
        AffineForm {
            constant,
            coeffs: coeffs
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(i, c)| (i, c.clone()))
                .collect(),
        }
    }

    pub fn constant_term(&self) -> &Rational {
        &self.constant
    }

    pub fn coefficient(&self, index: usize) -> Rational {
        self.coeffs
            .get(&index)
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    pub fn coefficients(&self) -> impl Iterator<Item = (usize, &Rational)> {
        self.coeffs.iter().map(|(i, c)| (*i, c))
    }

    pub fn is_zero(&self) -> bool {
        self.constant.is_zero() && self.coeffs.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_homogeneous(&self) -> bool {
        self.constant.is_zero()
    }

    pub fn scale(&self, c: &Rational) -> AffineForm {
        if c.is_zero() {
            return AffineForm::zero();
        }
        AffineForm {
            constant: &self.constant * c,
            coeffs: self.coeffs.iter().map(|(i, v)| (*i, v * c)).collect(),
        }
    }

    /// Value at a dense point whose i-th entry binds parameter i.
    pub fn eval(&self, point: &[Rational]) -> Result<Rational> {
        let mut acc = self.constant.clone();
        for (i, c) in &self.coeffs {
            let v = point
                .get(*i)
                .ok_or_else(|| Error::MissingBinding(format!("#{i}")))?;
            acc += c * v;
        }
        Ok(acc)
    }

    /// Largest parameter index that carries a nonzero coefficient.
    pub fn max_param(&self) -> Option<usize> {
        self.coeffs.keys().next_back().copied()
    }

    /// Human-readable rendering such as `68/45*alpha1 - 136/45*gamma`.
    pub fn display(&self, space: &ParamSpace) -> String {
        let mut out = String::new();
        let mut push = |c: &Rational, name: Option<&str>| {
            let neg = c.is_negative();
            let mag = c.abs();
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            match name {
                Some(n) if mag.is_one() => out.push_str(n),
                Some(n) => {
                    let _ = write!(out, "{}*{n}", format_rational(&mag));
                }
                None => out.push_str(&format_rational(&mag)),
            }
        };
        for (i, c) in &self.coeffs {
            let name = space.names.get(*i).map_or("?", String::as_str);
            push(c, Some(name));
        }
        if !self.constant.is_zero() {
            push(&self.constant, None);
        }
        if out.is_empty() {
            out.push('0');
        }
        out
    }

    /// Serializable view `{"const": "p/q", "coeffs": {name: "p/q", ...}}`
    /// with coefficients listed in declared parameter order.
    pub fn named<'a>(&'a self, space: &'a ParamSpace) -> NamedForm<'a> {
        NamedForm { form: self, space }
    }

    fn add_coeff(&mut self, index: usize, c: &Rational) {
        if c.is_zero() {
            return;
        }
        let entry = self.coeffs.entry(index).or_insert_with(Rational::zero);
        *entry += c;
        if entry.is_zero() {
            self.coeffs.remove(&index);
        }
    }
}

/// Evaluates `f` at a point given by parameter name.
pub fn affine_eval(
    f: &AffineForm,
    space: &ParamSpace,
    point: &BTreeMap<String, Rational>,
) -> Result<Rational> {
    let mut acc = f.constant.clone();
    for (i, c) in &f.coeffs {
        let name = space
            .names
            .get(*i)
            .ok_or_else(|| Error::MissingBinding(format!("#{i}")))?;
        let v = point
            .get(name)
            .ok_or_else(|| Error::MissingBinding(name.clone()))?;
        acc += c * v;
    }
    Ok(acc)
}

impl Add for AffineForm {
    type Output = AffineForm;
    fn add(mut self, rhs: AffineForm) -> AffineForm {
        self.constant += rhs.constant;
        for (i, c) in &rhs.coeffs {
            self.add_coeff(*i, c);
        }
        self
    }
}

impl<'a> Add<&'a AffineForm> for &'a AffineForm {
    type Output = AffineForm;
    fn add(self, rhs: &AffineForm) -> AffineForm {
        self.clone() + rhs.clone()
    }
}

impl Sub for AffineForm {
    type Output = AffineForm;
    fn sub(self, rhs: AffineForm) -> AffineForm {
        self + (-rhs)
    }
}

impl<'a> Sub<&'a AffineForm> for &'a AffineForm {
    type Output = AffineForm;
    fn sub(self, rhs: &AffineForm) -> AffineForm {
        self.clone() - rhs.clone()
    }
}

impl Neg for AffineForm {
    type Output = AffineForm;
    fn neg(self) -> AffineForm {
        AffineForm {
            constant: -self.constant,
            coeffs: self.coeffs.into_iter().map(|(i, c)| (i, -c)).collect(),
        }
    }
}

impl Mul<&Rational> for &AffineForm {
    type Output = AffineForm;
    fn mul(self, rhs: &Rational) -> AffineForm {
        self.scale(rhs)
    }
}

impl std::iter::Sum for AffineForm {
    fn sum<I: Iterator<Item = AffineForm>>(iter: I) -> Self {
        iter.fold(AffineForm::zero(), |acc, f| acc + f)
    }
}

pub struct NamedForm<'a> {
    form: &'a AffineForm,
    space: &'a ParamSpace,
}

impl Serialize for NamedForm<'_> {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        struct Coeffs<'a>(&'a NamedForm<'a>);
        impl Serialize for Coeffs<'_> {
            fn serialize<S: Serializer>(
                &self,
                serializer: S,
            ) -> std::result::Result<S::Ok, S::Error> {
                let mut map = serializer.serialize_map(Some(self.0.form.coeffs.len()))?;
                for (i, c) in &self.0.form.coeffs {
                    let name = self.0.space.names.get(*i).map_or("?", String::as_str);
                    map.serialize_entry(name, &format_rational(c))?;
                }
                map.end()
            }
        }
        let mut map = serializer.serialize_map(Some(2))?;
        map.serialize_entry("const", &format_rational(&self.form.constant))?;
        map.serialize_entry("coeffs", &Coeffs(self))?;
        map.end()
    }
}
