//! Class functions and character tables.
//!
//! Irreducible characters are computed from the class algebra. Common
//! eigenvectors of the class multiplication matrices are found numerically
//! (Burnside's method). The eigenvalue multiplicities of each
//! representation on each cyclic subgroup are then rounded, which writes
//! every value exactly as a sum of roots of unity in `Z[ζ_L]`. Here `L` is
//! the exponent of the group. The rounded table is accepted only after exact
//! checks: orthonormality, integrality of degrees, and the class algebra
//! identity for every central character.
//!
//! b-invariants come from the Molien series of the reflection
//! representation, expanded exactly in `Z[ζ_L][[q]]`.

use nalgebra::DMatrix;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::algebra::{cyclotomic_polynomial, IntPoly, QuotientRing};
use crate::coxeter::{ConjugacyAnalysis, Group};
use crate::error::{Error, Result};

/// An integer-valued class function, one value per conjugacy class in the
/// order of [`ConjugacyAnalysis`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassFunction {
    pub values: Vec<i64>,
}

impl ClassFunction {
    pub fn new(values: Vec<i64>) -> Self {
        ClassFunction { values }
    }

    pub fn zero(num_classes: usize) -> Self {
        ClassFunction { values: vec![0; num_classes] }
    }

    pub fn add_assign(&mut self, other: &ClassFunction) {
        for (a, b) in self.values.iter_mut().zip(&other.values) {
            *a += b;
        }
    }

    /// `(1/|W|) Σ_C |C| f(C) g(C)` as an exact fraction `(num, |W|)`.
    pub fn inner_product_numerator(&self, other: &ClassFunction, sizes: &[usize]) -> i128 {
        self.values
            .iter()
            .zip(&other.values)
            .zip(sizes)
            .map(|((&a, &b), &h)| a as i128 * b as i128 * h as i128)
            .sum()
    }
}

/// `Z[ζ_L]` with `ζ_L = e^{2πi/L}`.
#[derive(Clone, Debug)]
pub struct CyclotomicField {
    conductor: u32,
    ring: QuotientRing,
}

impl CyclotomicField {
    pub fn new(conductor: u32) -> Self {
        CyclotomicField { conductor, ring: QuotientRing::new(cyclotomic_polynomial(conductor)) }
    }

    pub fn conductor(&self) -> u32 {
        self.conductor
    }

    pub fn ring(&self) -> &QuotientRing {
        &self.ring
    }

    /// `ζ_L^k`.
    pub fn zeta_power(&self, k: i64) -> IntPoly {
        let k = k.rem_euclid(self.conductor as i64) as usize;
        let mut p = vec![0i64; k + 1];
        p[k] = 1;
        self.ring.reduce(&p)
    }

    /// Complex conjugation, `ζ ↦ ζ^{-1}`.
    pub fn conj(&self, a: &[i64]) -> IntPoly {
        let l = self.conductor as usize;
        let mut p = vec![0i64; l];
        for (j, &c) in a.iter().enumerate() {
            p[(l - j) % l] += c;
        }
        self.ring.reduce(&p)
    }

    pub fn to_complex(&self, a: &[i64]) -> (f64, f64) {
        let theta = 2.0 * std::f64::consts::PI / self.conductor as f64;
        a.iter().enumerate().fold((0.0, 0.0), |(re, im), (j, &c)| {
            (re + c as f64 * (theta * j as f64).cos(), im + c as f64 * (theta * j as f64).sin())
        })
    }
}

#[derive(Clone, Debug)]
pub struct CharacterTable {
    type_name: String,
    order: usize,
    class_sizes: Vec<usize>,
    class_words: Vec<Vec<usize>>,
    field: CyclotomicField,
    names: Vec<String>,
    degrees: Vec<u64>,
    b_values: Vec<u32>,
    /// `values[i][c]`: irreducible `i` on class `c`.
    values: Vec<Vec<IntPoly>>,
}

fn lcm(a: u64, b: u64) -> u64 {
    fn gcd(a: u64, b: u64) -> u64 {
        if b == 0 {
            a
        } else {
            gcd(b, a % b)
        }
    }
    a / gcd(a, b) * b
}

/// `a_{jil} = #{x ∈ C_j : x^{-1} g_l ∈ C_i}`, stored as `a[j][i][l]`.
fn class_structure_constants(g: &Group, cc: &ConjugacyAnalysis) -> Vec<Vec<Vec<u64>>> {
    let k = cc.num_classes();
    let mut a = vec![vec![vec![0u64; k]; k]; k];
    for (l, class) in cc.classes.iter().enumerate() {
        let rep = class.representative;
        for x in 0..g.order() {
            let y = g.mul(g.inverse(x), rep);
            a[cc.class_of[x] as usize][cc.class_of[y] as usize][l] += 1;
        }
    }
    a
}

/// Numerical irreducible characters, one row per irreducible.
fn numeric_characters(g: &Group, cc: &ConjugacyAnalysis, a: &[Vec<Vec<u64>>]) -> Result<Vec<Vec<f64>>> {
    let k = cc.num_classes();
    let h: Vec<f64> = cc.classes.iter().map(|c| c.size as f64).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    for _attempt in 0..50 {
        let coeffs: Vec<f64> = (0..k).map(|_| rng.gen_range(-12i32..=12) as f64).collect();
        // B = D^{-1/2} (Σ c_j A_j) D^{1/2} is symmetric because every class is real.
        let b = DMatrix::from_fn(k, k, |i, l| {
            let s: f64 = (0..k).map(|j| coeffs[j] * a[j][i][l] as f64).sum();
            s * (h[l] / h[i]).sqrt()
        });
        let eig = b.symmetric_eigen();
        let mut ev: Vec<f64> = eig.eigenvalues.iter().copied().collect();
        ev.sort_by(|x, y| x.partial_cmp(y).unwrap());
        let scale = ev.iter().fold(1.0f64, |m, x| m.max(x.abs()));
        if ev.windows(2).any(|w| w[1] - w[0] < 1e-6 * scale) {
            continue;
        }
        let mut rows = Vec::with_capacity(k);
        for col in 0..k {
            let u = eig.eigenvectors.column(col);
            let omega: Vec<f64> = (0..k).map(|i| u[i] * h[i].sqrt()).collect();
            if omega[0].abs() < 1e-12 {
                return Err(Error::CharacterTable("degenerate eigenvector".into()));
            }
            let omega: Vec<f64> = omega.iter().map(|x| x / omega[0]).collect();
            let norm: f64 = (0..k).map(|i| omega[i] * omega[i] / h[i]).sum();
            let degree = (g.order() as f64 / norm).sqrt();
            rows.push((0..k).map(|i| omega[i] * degree / h[i]).collect());
        }
        return Ok(rows);
    }
    Err(Error::CharacterTable("could not separate central characters".into()))
}

impl CharacterTable {
    /// Compute the character table of `g`, including b-invariants.
    pub fn compute(g: &Group, cc: &ConjugacyAnalysis) -> Result<CharacterTable> {
        let k = cc.num_classes();
        let power_maps = cc.power_maps(g);
        let orders: Vec<u64> = cc.classes.iter().map(|c| c.element_order as u64).collect();
        let conductor = orders.iter().fold(1u64, |acc, &o| lcm(acc, o)).max(1) as u32;
        let field = CyclotomicField::new(conductor);
        let a = class_structure_constants(g, cc);
        let numeric = numeric_characters(g, cc, &a)?;
        let mut values = Vec::with_capacity(k);
        let mut degrees = Vec::with_capacity(k);
        for row in &numeric {
            let mut exact = Vec::with_capacity(k);
            for (c, pm) in power_maps.iter().enumerate() {
                let mult = eigenvalue_multiplicities(row, pm)
                    .ok_or_else(|| Error::CharacterTable(format!("non-integral multiplicities on class {c}")))?;
                let o = pm.len() as i64;
                let mut val = field.ring().zero();
                for (j, &n) in mult.iter().enumerate() {
                    if n != 0 {
                        let z = field.zeta_power(j as i64 * conductor as i64 / o);
                        val = field.ring().add(&val, &field.ring().scale(&z, n));
                    }
                }
                exact.push(val);
            }
            let d = field
                .ring()
                .as_integer(&exact[0])
                .filter(|&d| d > 0)
                .ok_or_else(|| Error::CharacterTable("degree is not a positive integer".into()))?;
            degrees.push(d as u64);
            values.push(exact);
        }
        let mut table = CharacterTable {
            type_name: g.type_name().to_string(),
            order: g.order(),
            class_sizes: cc.classes.iter().map(|c| c.size).collect(),
            class_words: cc.classes.iter().map(|c| g.canonical_word(c.representative)).collect(),
            field,
            names: Vec::new(),
            degrees,
            b_values: Vec::new(),
            values,
        };
        table.verify_orthonormal()?;
        table.verify_central_characters(&a)?;
        table.b_values = table.compute_b_values(g, cc, &power_maps)?;
        table.sort_and_name();
        Ok(table)
    }

    fn inner_product_exact(&self, x: &[IntPoly], y: &[IntPoly]) -> Result<i64> {
        let r = self.field.ring();
        let mut acc = r.zero();
        for ((a, b), &h) in x.iter().zip(y).zip(&self.class_sizes) {
            acc = r.add(&acc, &r.scale(&r.mul(a, &self.field.conj(b)), h as i64));
        }
        let total = r.as_integer(&acc).ok_or_else(|| Error::CharacterTable("irrational inner product".into()))?;
        if total % self.order as i64 != 0 {
            return Err(Error::CharacterTable("non-integral inner product".into()));
        }
        Ok(total / self.order as i64)
    }

    fn verify_orthonormal(&self) -> Result<()> {
        for i in 0..self.values.len() {
            for j in i..self.values.len() {
                let ip = self.inner_product_exact(&self.values[i], &self.values[j])?;
                if ip != i64::from(i == j) {
                    return Err(Error::CharacterTable(format!("rows {i},{j} have inner product {ip}")));
                }
            }
        }
        let sum_sq: u64 = self.degrees.iter().map(|d| d * d).sum();
        if sum_sq != self.order as u64 {
            return Err(Error::CharacterTable("degrees do not square-sum to |W|".into()));
        }
        Ok(())
    }

    /// `|C_j| χ_j |C_i| χ_i = χ(1) Σ_l a_{jil} |C_l| χ_l` exactly.
    fn verify_central_characters(&self, a: &[Vec<Vec<u64>>]) -> Result<()> {
        let r = self.field.ring();
        let k = self.class_sizes.len();
        for (row, &deg) in self.values.iter().zip(&self.degrees) {
            let hx: Vec<IntPoly> = (0..k).map(|c| r.scale(&row[c], self.class_sizes[c] as i64)).collect();
            for j in 0..k {
                for i in j..k {
                    let lhs = r.mul(&hx[j], &hx[i]);
                    let mut rhs = r.zero();
                    for (l, hxl) in hx.iter().enumerate() {
                        if a[j][i][l] != 0 {
                            rhs = r.add(&rhs, &r.scale(hxl, a[j][i][l] as i64));
                        }
                    }
                    if lhs != r.scale(&rhs, deg as i64) {
                        return Err(Error::CharacterTable("class algebra identity fails".into()));
                    }
                }
            }
        }
        Ok(())
    }

    fn compute_b_values(&self, g: &Group, cc: &ConjugacyAnalysis, power_maps: &[Vec<usize>]) -> Result<Vec<u32>> {
        let r = self.field.ring();
        let datum = g.datum();
        let n = g.max_length();
        // Reflection character, numerically, then det(1 - q g) exactly.
        let refl: Vec<f64> = cc
            .classes
            .iter()
            .map(|c| datum.reflection_matrix_f64(&g.canonical_word(c.representative)).trace())
            .collect();
        let mut inverse_dets: Vec<Vec<IntPoly>> = Vec::with_capacity(cc.num_classes());
        for pm in power_maps {
            let mult = eigenvalue_multiplicities(&refl, pm)
                .ok_or_else(|| Error::CharacterTable("reflection eigenvalues not roots of unity".into()))?;
            let o = pm.len() as i64;
            let mut det: Vec<IntPoly> = vec![r.from_int(1)];
            for (j, &m) in mult.iter().enumerate() {
                let z = self.field.zeta_power(j as i64 * self.field.conductor() as i64 / o);
                for _ in 0..m {
                    let mut next = vec![r.zero(); det.len() + 1];
                    for (d, c) in det.iter().enumerate() {
                        next[d] = r.add(&next[d], c);
                        next[d + 1] = r.sub(&next[d + 1], &r.mul(c, &z));
                    }
                    det = next;
                }
            }
            // Power series inverse up to q^n.
            let mut inv: Vec<IntPoly> = vec![r.from_int(1)];
            for d in 1..=n {
                let mut acc = r.zero();
                for j in 1..det.len().min(d + 1) {
                    acc = r.sub(&acc, &r.mul(&det[j], &inv[d - j]));
                }
                inv.push(acc);
            }
            inverse_dets.push(inv);
        }
        let mut b = Vec::with_capacity(self.values.len());
        for row in &self.values {
            let mut found = None;
            for d in 0..=n {
                let mut acc = r.zero();
                for (c, inv) in inverse_dets.iter().enumerate() {
                    let term = r.mul(&inv[d], &self.field.conj(&row[c]));
                    acc = r.add(&acc, &r.scale(&term, self.class_sizes[c] as i64));
                }
                let total = r
                    .as_integer(&acc)
                    .ok_or_else(|| Error::CharacterTable("irrational Molien coefficient".into()))?;
                if total % self.order as i64 != 0 || total < 0 {
                    return Err(Error::CharacterTable("invalid Molien coefficient".into()));
                }
                if total > 0 {
                    found = Some(d as u32);
                    break;
                }
            }
            b.push(found.ok_or_else(|| Error::CharacterTable("character missing from coinvariants".into()))?);
        }
        Ok(b)
    }

    fn sort_and_name(&mut self) {
        let k = self.values.len();
        let mut order: Vec<usize> = (0..k).collect();
        order.sort_by(|&x, &y| {
            (self.b_values[x], self.degrees[x], &self.values[x]).cmp(&(self.b_values[y], self.degrees[y], &self.values[y]))
        });
        self.values = order.iter().map(|&i| self.values[i].clone()).collect();
        self.degrees = order.iter().map(|&i| self.degrees[i]).collect();
        self.b_values = order.iter().map(|&i| self.b_values[i]).collect();
        let mut names = Vec::with_capacity(k);
        for i in 0..k {
            let base = format!("phi{},{}", self.degrees[i], self.b_values[i]);
            let dup = (0..i).filter(|&j| self.degrees[j] == self.degrees[i] && self.b_values[j] == self.b_values[i]).count();
            let total = (0..k).filter(|&j| self.degrees[j] == self.degrees[i] && self.b_values[j] == self.b_values[i]).count();
            names.push(if total == 1 { base } else { format!("{base}{}", "'".repeat(dup + 1)) });
        }
        self.names = names;
    }

    pub fn type_name(&self) -> &str {
        &self.type_name
    }

    pub fn num_irreducibles(&self) -> usize {
        self.values.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn index_of(&self, name: &str) -> Result<usize> {
        self.names.iter().position(|n| n == name).ok_or_else(|| Error::UnknownCharacter(name.to_string()))
    }

    pub fn degree(&self, i: usize) -> u64 {
        self.degrees[i]
    }

    pub fn degrees(&self) -> &[u64] {
        &self.degrees
    }

    pub fn b_value(&self, i: usize) -> u32 {
        self.b_values[i]
    }

    pub fn class_sizes(&self) -> &[usize] {
        &self.class_sizes
    }

    pub fn field(&self) -> &CyclotomicField {
        &self.field
    }

    /// Exact value of irreducible `i` on class `c`.
    pub fn value(&self, i: usize, c: usize) -> &[i64] {
        &self.values[i][c]
    }

    /// Value as an integer, when rational.
    pub fn value_int(&self, i: usize, c: usize) -> Option<i64> {
        self.field.ring().as_integer(&self.values[i][c])
    }

    pub fn is_rational(&self) -> bool {
        self.values.iter().flatten().all(|v| self.field.ring().as_integer(v).is_some())
    }

    /// The trivial character (index of `phi1,0`).
    pub fn trivial(&self) -> usize {
        0
    }

    /// The sign character.
    pub fn sign(&self) -> usize {
        (0..self.values.len())
            .find(|&i| self.degrees[i] == 1 && self.b_values[i] == self.b_values.iter().copied().max().unwrap())
            .unwrap()
    }

    /// `⟨f, χ_i⟩`.
    pub fn multiplicity(&self, f: &ClassFunction, i: usize) -> Result<u64> {
        if f.values.len() != self.class_sizes.len() {
            return Err(Error::TableMismatch);
        }
        let r = self.field.ring();
        let fv: Vec<IntPoly> = f.values.iter().map(|&x| r.from_int(x)).collect();
        let m = self.inner_product_exact(&fv, &self.values[i])?;
        u64::try_from(m).map_err(|_| Error::CharacterTable("negative multiplicity".into()))
    }

    /// Multiplicities of every irreducible in `f`.
    pub fn decompose(&self, f: &ClassFunction) -> Result<Vec<u64>> {
        (0..self.values.len()).map(|i| self.multiplicity(f, i)).collect()
    }

    /// Check that a class function's class layout matches this table.
    pub fn check_classes(&self, g: &Group, cc: &ConjugacyAnalysis) -> Result<()> {
        if cc.num_classes() != self.class_sizes.len() || g.order() != self.order {
            return Err(Error::TableMismatch);
        }
        for (c, class) in cc.classes.iter().enumerate() {
            let w = g.from_word(&self.class_words[c]).map_err(|_| Error::TableMismatch)?;
            if cc.class_of[w] as usize != c || class.size != self.class_sizes[c] {
                return Err(Error::TableMismatch);
            }
        }
        Ok(())
    }

    /// JSON export. Rational values are integers; irrational ones are
    /// coordinate arrays in the power basis of `Z[ζ_L]`, `L = conductor`.
    pub fn to_json(&self) -> Value {
        let r = self.field.ring();
        let classes: Vec<Value> = self
            .class_words
            .iter()
            .zip(&self.class_sizes)
            .map(|(w, s)| serde_json::json!({ "word": w, "size": s }))
            .collect();
        let irreducibles: Vec<Value> = (0..self.values.len())
            .map(|i| {
                let vals: Vec<Value> = self.values[i]
                    .iter()
                    .map(|v| match r.as_integer(v) {
                        Some(c) => Value::from(c),
                        None => Value::from(v.clone()),
                    })
                    .collect();
                serde_json::json!({
                    "name": self.names[i],
                    "degree": self.degrees[i],
                    "b": self.b_values[i],
                    "values": vals,
                })
            })
            .collect();
        serde_json::json!({
            "type": self.type_name,
            "order": self.order,
            "conductor": self.field.conductor(),
            "classes": classes,
            "irreducibles": irreducibles,
        })
    }

    /// Load a table exported by [`CharacterTable::to_json`], re-validating it
    /// against the given group.
    pub fn from_json(value: &Value, g: &Group, cc: &ConjugacyAnalysis) -> Result<CharacterTable> {
        let bad = |m: &str| Error::Format(format!("character table: {m}"));
        let conductor = value["conductor"].as_u64().ok_or_else(|| bad("conductor"))? as u32;
        let field = CyclotomicField::new(conductor);
        let r = field.ring().clone();
        let classes = value["classes"].as_array().ok_or_else(|| bad("classes"))?;
        let mut class_words = Vec::new();
        let mut class_sizes = Vec::new();
        for c in classes {
            let w: Vec<usize> = serde_json::from_value(c["word"].clone())?;
            class_words.push(w);
            class_sizes.push(c["size"].as_u64().ok_or_else(|| bad("class size"))? as usize);
        }
        let mut names = Vec::new();
        let mut degrees = Vec::new();
        let mut b_values = Vec::new();
        let mut values = Vec::new();
        for irr in value["irreducibles"].as_array().ok_or_else(|| bad("irreducibles"))? {
            names.push(irr["name"].as_str().ok_or_else(|| bad("name"))?.to_string());
            degrees.push(irr["degree"].as_u64().ok_or_else(|| bad("degree"))?);
            b_values.push(irr["b"].as_u64().ok_or_else(|| bad("b"))? as u32);
            let row: Vec<IntPoly> = irr["values"]
                .as_array()
                .ok_or_else(|| bad("values"))?
                .iter()
                .map(|v| match v {
                    Value::Number(n) => n.as_i64().map(|c| r.from_int(c)).ok_or_else(|| bad("value")),
                    _ => serde_json::from_value::<IntPoly>(v.clone())
                        .map_err(Error::from)
                        .and_then(|p| if p.len() == r.degree() { Ok(p) } else { Err(bad("value length")) }),
                })
                .collect::<Result<_>>()?;
            if row.len() != class_sizes.len() {
                return Err(bad("row length"));
            }
            values.push(row);
        }
        let table = CharacterTable {
            type_name: value["type"].as_str().unwrap_or_default().to_string(),
            order: value["order"].as_u64().ok_or_else(|| bad("order"))? as usize,
            class_sizes,
            class_words,
            field,
            names,
            degrees,
            b_values,
            values,
        };
        table.check_classes(g, cc)?;
        for (i, &d) in table.degrees.iter().enumerate() {
            if table.value_int(i, 0) != Some(d as i64) {
                return Err(bad("first column differs from degrees"));
            }
        }
        table.verify_orthonormal()?;
        Ok(table)
    }
}

/// Multiplicities `n_j` of the eigenvalue `ζ_o^j` of a representation on
/// a cyclic subgroup of order `o`, from numerical character values on its
/// powers (`power_map[p]` = class of `g^p`). `None` unless they round
/// cleanly to nonnegative integers.
fn eigenvalue_multiplicities(values: &[f64], power_map: &[usize]) -> Option<Vec<i64>> {
    let o = power_map.len();
    let mut out = Vec::with_capacity(o);
    for j in 0..o {
        let mut re = 0.0;
        let mut im = 0.0;
        for (p, &c) in power_map.iter().enumerate() {
            let ang = -2.0 * std::f64::consts::PI * (p * j) as f64 / o as f64;
            re += values[c] * ang.cos();
            im += values[c] * ang.sin();
        }
        re /= o as f64;
        im /= o as f64;
        let n = re.round();
        if (re - n).abs() > 1e-4 || im.abs() > 1e-4 || n < 0.0 {
            return None;
        }
        out.push(n as i64);
    }
    Some(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn table(spec: &str) -> (std::sync::Arc<Group>, ConjugacyAnalysis, CharacterTable) {
        let g = Group::from_spec(spec).unwrap();
        let cc = ConjugacyAnalysis::new(&g);
        let t = CharacterTable::compute(&g, &cc).unwrap();
        (g, cc, t)
    }

    #[test]
    fn symmetric_group_s3() {
        let (_, _, t) = table("A2");
        assert_eq!(t.names(), &["phi1,0", "phi2,1", "phi1,3"]);
        assert_eq!(t.value_int(1, 1), Some(0));
        assert_eq!(t.value_int(1, 2), Some(-1));
        assert_eq!(t.value_int(2, 1), Some(-1));
    }

    #[test]
    fn trivial_and_sign_b_values() {
        for spec in ["B3", "D4", "H3", "F4", "I2(5)", "I2(8)"] {
            let (g, _, t) = table(spec);
            assert_eq!(t.b_value(t.trivial()), 0);
            assert_eq!(t.b_value(t.sign()) as usize, g.max_length());
            assert_eq!(t.num_irreducibles(), ConjugacyAnalysis::new(&g).num_classes());
        }
    }

    #[test]
    fn involution_count_equals_degree_sum() {
        for spec in ["A4", "B4", "D4", "H3", "F4", "I2(7)", "I2(10)"] {
            let (_, cc, t) = table(spec);
            let s: u64 = t.degrees().iter().sum();
            assert_eq!(s as usize, cc.involutions.len(), "{spec}");
        }
    }

    #[test]
    fn h3_has_golden_ratio_values() {
        let (_, _, t) = table("H3");
        assert!(!t.is_rational());
        assert_eq!(t.num_irreducibles(), 10);
    }

    #[test]
    fn json_round_trip() {
        let (g, cc, t) = table("H3");
        let j = t.to_json();
        let back = CharacterTable::from_json(&j, &g, &cc).unwrap();
        assert_eq!(back.names(), t.names());
        assert_eq!(back.to_json(), j);
    }
}
