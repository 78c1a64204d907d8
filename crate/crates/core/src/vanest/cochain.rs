use super::poly::rename_monomial;
use super::{monomials_up_to, variable_names, GroupAction, Monomial, MultiPoly, PolyGroup, VanEstError};
use crate::linalg::Rational;
use crate::par;

/// An `n`-cochain `G^n -> a` whose components are polynomials in the
/// `n * d` coordinates of `(g_1, ..., g_n)`, block `i` holding `g_i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyCochain {
    n: usize,
    d: usize,
    components: Vec<MultiPoly>,
}

impl PolyCochain {
    pub fn new(n: usize, d: usize, components: Vec<MultiPoly>) -> Result<Self, VanEstError> {
        if let Some(p) = components.iter().find(|p| p.nvars() != n * d) {
            return Err(VanEstError::ShapeMismatch(format!(
                "a {n}-cochain on a {d}-dim group needs {} variables, got {}",
                n * d,
                p.nvars()
            )));
        }
        Ok(PolyCochain { n, d, components })
    }

    pub fn zero(n: usize, d: usize, a_dim: usize) -> Self {
        PolyCochain { n, d, components: vec![MultiPoly::zero(n * d); a_dim] }
    }

    /// The cochain with a single monomial in one component.
    pub fn unit(n: usize, d: usize, a_dim: usize, component: usize, m: Monomial) -> Self {
        let mut c = Self::zero(n, d, a_dim);
        c.components[component] = MultiPoly::monomial(m, Rational::from_integer(1.into()));
        c
    }

    pub fn degree_n(&self) -> usize {
        self.n
    }

    pub fn group_dim(&self) -> usize {
        self.d
    }

    pub fn a_dim(&self) -> usize {
        self.components.len()
    }

    pub fn components(&self) -> &[MultiPoly] {
        &self.components
    }

    /// Maximum total degree of the components.
    pub fn max_degree(&self) -> usize {
        self.components.iter().map(MultiPoly::degree).max().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.components.iter().all(MultiPoly::is_zero)
    }

    /// Variable names `g1_1, ..., gn_d` for display.
    pub fn variable_names(&self) -> Vec<String> {
        (1..=self.n).flat_map(|b| (1..=self.d).map(move |i| format!("g{b}_{i}"))).collect()
    }

    pub fn to_strings(&self) -> Vec<String> {
        let names = match self.n {
            1 => variable_names(self.d, false),
            2 => variable_names(self.d, true),
            _ => self.variable_names(),
        };
        self.components.iter().map(|p| p.to_string_with(&names)).collect()
    }
}

/// Precomputed data for `delta` on `n`-cochains.
pub(crate) struct Differential<'a> {
    n: usize,
    d: usize,
    action: &'a GroupAction,
    /// `action[r][c]` on block 0 of the target ring.
    action_g0: Vec<Vec<MultiPoly>>,
    /// For each middle face `i`, the powers `law_k(g_i, g_{i+1})^e`.
    face_powers: Vec<Vec<Vec<MultiPoly>>>,
}

impl<'a> Differential<'a> {
    pub(crate) fn new(group: &PolyGroup, action: &'a GroupAction, n: usize, max_degree: usize) -> Self {
        let d = group.dim();
        let target = (n + 1) * d;
        let action_g0 = action.matrix().iter().map(|row| row.iter().map(|p| p.shift(target, 0)).collect()).collect();
        let face_powers = (0..n)
            .map(|i| {
                group
                    .law_on_blocks(target, i, i + 1)
                    .into_iter()
                    .map(|p| {
                        let mut pows = vec![MultiPoly::one(target)];
                        for _ in 0..max_degree {
                            let next = pows.last().expect("nonempty") * &p;
                            pows.push(next);
                        }
                        pows
                    })
                    .collect()
            })
            .collect();
        Differential { n, d, action, action_g0, face_powers }
    }

    pub(crate) fn target_vars(&self) -> usize {
        (self.n + 1) * self.d
    }

    /// `delta` of the cochain with monomial `m` in component `b`.
    pub(crate) fn apply_unit(&self, b: usize, m: &Monomial) -> Vec<MultiPoly> {
        let (n, d) = (self.n, self.d);
        let target = self.target_vars();
        let a = self.action.dim();
        let mut out = vec![MultiPoly::zero(target); a];
        let one = Rational::from_integer(1.into());

        // g_0 . f(g_1, ..., g_n)
        let shifted: Vec<usize> = (0..n * d).map(|v| v + d).collect();
        let m1 = MultiPoly::monomial(rename_monomial(m, target, &shifted), one.clone());
        for (c, row) in self.action_g0.iter().enumerate() {
            if !row[b].is_zero() {
                out[c] = &out[c] + &(&row[b] * &m1);
            }
        }

        // (-1)^{n+1} f(g_0, ..., g_{n-1})
        let ident: Vec<usize> = (0..n * d).collect();
        let sign = if n % 2 == 0 { -one.clone() } else { one.clone() };
        out[b].add_term(rename_monomial(m, target, &ident), sign);

        // (-1)^{i+1} f(g_0, ..., g_i g_{i+1}, ..., g_n)
        for i in 0..n {
            let mut rest = vec![0u32; target];
            let mut term = MultiPoly::one(target);
            for (v, &e) in m.exponents().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let (block, k) = (v / d, v % d);
                match block.cmp(&i) {
                    std::cmp::Ordering::Less => rest[v] += e,
                    std::cmp::Ordering::Greater => rest[v + d] += e,
                    std::cmp::Ordering::Equal => term = &term * &self.face_powers[i][k][e as usize],
                }
            }
            let sign = if i % 2 == 0 { -one.clone() } else { one.clone() };
            let rest = MultiPoly::monomial(Monomial::from_exponents(rest), sign);
            out[b] = &out[b] + &(&term * &rest);
        }
        out
    }

    pub(crate) fn apply(&self, f: &PolyCochain) -> PolyCochain {
        let target = self.target_vars();
        let mut out = vec![MultiPoly::zero(target); self.action.dim()];
        for (b, p) in f.components.iter().enumerate() {
            for (m, c) in p.terms() {
                for (o, img) in out.iter_mut().zip(self.apply_unit(b, m)) {
                    o.add_scaled(&img, c);
                }
            }
        }
        PolyCochain { n: self.n + 1, d: self.d, components: out }
    }
}

fn check_inputs(group: &PolyGroup, action: &GroupAction) -> Result<(), VanEstError> {
    if action.group_dim() != group.dim() {
        return Err(VanEstError::ShapeMismatch(format!(
            "action is over a {}-dim group, the group has dim {}",
            action.group_dim(),
            group.dim()
        )));
    }
    Ok(())
}

/// `(delta f)(g_0..g_n) = g_0 . f(g_1..g_n) + sum_i (-1)^{i+1} f(.., g_i g_{i+1}, ..)
/// + (-1)^{n+1} f(g_0..g_{n-1})`.
pub fn group_differential(f: &PolyCochain, group: &PolyGroup, action: &GroupAction) -> Result<PolyCochain, VanEstError> {
    check_inputs(group, action)?;
    if f.d != group.dim() || f.a_dim() != action.dim() {
        return Err(VanEstError::ShapeMismatch("cochain does not match the group and module".into()));
    }
    Ok(Differential::new(group, action, f.n, f.max_degree()).apply(f))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DeltaSquaredReport {
    pub n: usize,
    pub max_degree: usize,
    pub cochains_checked: usize,
}

/// Checks `delta(delta f) = 0` for every monomial `n`-cochain of degree at
/// most `max_degree`.
pub fn delta_squared_check(
    group: &PolyGroup,
    action: &GroupAction,
    n: usize,
    max_degree: usize,
) -> Result<DeltaSquaredReport, VanEstError> {
    check_inputs(group, action)?;
    let d = group.dim();
    let a = action.dim();
    let law_degree = group.law().iter().map(MultiPoly::degree).max().unwrap_or(1).max(1);
    let first = Differential::new(group, action, n, max_degree);
    let second = Differential::new(group, action, n + 1, max_degree * law_degree);
    let units: Vec<(usize, Monomial)> =
        (0..a).flat_map(|b| monomials_up_to(n * d, max_degree).into_iter().map(move |m| (b, m))).collect();
    let failures = par::map(&units, |(b, m)| {
        let once = PolyCochain { n: n + 1, d, components: first.apply_unit(*b, m) };
        !second.apply(&once).is_zero()
    });
    if let Some(i) = failures.iter().position(|&f| f) {
        let (b, m) = &units[i];
        let names = PolyCochain::zero(n, d, a).variable_names();
        return Err(VanEstError::DeltaSquaredViolation {
            component: *b,
            monomial: MultiPoly::monomial(m.clone(), Rational::from_integer(1.into())).to_string_with(&names),
        });
    }
    Ok(DeltaSquaredReport { n, max_degree, cochains_checked: units.len() })
}
