use std::fmt;
use std::sync::{Arc, OnceLock};

use super::submodule::Submodule;
use super::vector::{self, Vector};
use crate::error::{Error, Result};
use crate::ring::{check_ring, PolyMatrix, PolyRing, Polynomial};

/// A graded module `coker(A^relations → A^generators)`. Relations are rows:
/// relation `j` is the vector `Σ_i P[j][i]·e_i`.
#[derive(Clone, Debug)]
pub struct FPModule {
    ring: Arc<PolyRing>,
    gen_degrees: Vec<i64>,
    rel_degrees: Vec<i64>,
    relations: Vec<Vector>,
    rel_sub: OnceLock<Submodule>,
}

impl PartialEq for FPModule {
    fn eq(&self, other: &Self) -> bool {
        self.ring == other.ring
            && self.gen_degrees == other.gen_degrees
            && self.rel_degrees == other.rel_degrees
            && self.relations == other.relations
    }
}

impl FPModule {
    /// Validates that entry `(j, i)` is homogeneous of degree
    /// `rel_degrees[j] - gen_degrees[i]`.
    pub fn new(
        ring: &Arc<PolyRing>,
        gen_degrees: Vec<i64>,
        rel_degrees: Vec<i64>,
        relations: Vec<Vector>,
    ) -> Result<FPModule> {
        if rel_degrees.len() != relations.len() {
            return Err(Error::InvalidInput(format!(
                "{} relation degrees for {} relations",
                rel_degrees.len(),
                relations.len()
            )));
        }
        for (j, row) in relations.iter().enumerate() {
            if row.len() != gen_degrees.len() {
                return Err(Error::InvalidInput(format!(
                    "relation {j} has {} entries for {} generators",
                    row.len(),
                    gen_degrees.len()
                )));
            }
            for (i, p) in row.iter().enumerate() {
                check_ring(p.ring(), ring)?;
                if p.is_zero() {
                    continue;
                }
                match p.homogeneous_degree() {
                    Some(d) if d == rel_degrees[j] - gen_degrees[i] => {}
                    _ => {
                        return Err(Error::InvalidInput(format!(
                            "relation {j}, generator {i}: `{p}` is not homogeneous of degree {}",
                            rel_degrees[j] - gen_degrees[i]
                        )))
                    }
                }
            }
        }
        Ok(FPModule {
            ring: ring.clone(),
            gen_degrees,
            rel_degrees,
            relations,
            rel_sub: OnceLock::new(),
        })
    }

    /// Like [`FPModule::new`], reading each relation degree off its entries.
    /// Zero relations are dropped.
    pub fn from_relations(
        ring: &Arc<PolyRing>,
        gen_degrees: Vec<i64>,
        relations: Vec<Vector>,
    ) -> Result<FPModule> {
        let mut rels = Vec::new();
        let mut degs = Vec::new();
        for (j, r) in relations.into_iter().enumerate() {
            if r.len() != gen_degrees.len() {
                return Err(Error::InvalidInput(format!(
                    "relation {j} has {} entries for {} generators",
                    r.len(),
                    gen_degrees.len()
                )));
            }
            match vector::vector_degree(&r, &gen_degrees) {
                Some(d) => {
                    degs.push(d);
                    rels.push(r);
                }
                None if vector::is_zero(&r) => {}
                None => {
                    return Err(Error::InvalidInput(format!("relation {j} is not homogeneous")))
                }
            }
        }
        FPModule::new(ring, gen_degrees, degs, rels)
    }

    pub fn free(ring: &Arc<PolyRing>, gen_degrees: Vec<i64>) -> FPModule {
        FPModule::new(ring, gen_degrees, Vec::new(), Vec::new()).unwrap()
    }

    pub fn free_rank(ring: &Arc<PolyRing>, rank: usize) -> FPModule {
        FPModule::free(ring, vec![0; rank])
    }

    pub fn zero(ring: &Arc<PolyRing>) -> FPModule {
        FPModule::free(ring, Vec::new())
    }

    /// `A / I` as a cyclic module.
    pub fn cyclic(ring: &Arc<PolyRing>, ideal_gens: &[Polynomial]) -> Result<FPModule> {
        FPModule::from_relations(ring, vec![0], ideal_gens.iter().map(|g| vec![g.clone()]).collect())
    }

    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.ring
    }

    pub fn ngens(&self) -> usize {
        self.gen_degrees.len()
    }

    pub fn nrels(&self) -> usize {
        self.relations.len()
    }

    pub fn gen_degrees(&self) -> &[i64] {
        &self.gen_degrees
    }

    pub fn rel_degrees(&self) -> &[i64] {
        &self.rel_degrees
    }

    pub fn relations(&self) -> &[Vector] {
        &self.relations
    }

    /// The presentation matrix (rows are relations).
    pub fn presentation(&self) -> PolyMatrix {
        if self.relations.is_empty() {
            return PolyMatrix::zero(&self.ring, 0, self.ngens());
        }
        PolyMatrix::from_rows(&self.ring, self.relations.clone()).unwrap()
    }

    pub fn is_free(&self) -> bool {
        self.relations.iter().all(|r| vector::is_zero(r))
    }

    /// The relation submodule of `A^generators`.
    pub fn relation_module(&self) -> &Submodule {
        self.rel_sub.get_or_init(|| {
            Submodule::new(&self.ring, self.gen_degrees.clone(), self.relations.clone()).unwrap()
        })
    }

    pub fn zero_element(&self) -> Vector {
        vector::zero_vector(&self.ring, self.ngens())
    }

    pub fn generator(&self, i: usize) -> Vector {
        vector::unit_vector(&self.ring, self.ngens(), i)
    }

    pub fn check_element(&self, v: &[Polynomial]) -> Result<()> {
        if v.len() != self.ngens() {
            return Err(Error::InvalidInput(format!(
                "element has {} coordinates, module has {} generators",
                v.len(),
                self.ngens()
            )));
        }
        for p in v {
            check_ring(p.ring(), &self.ring)?;
        }
        Ok(())
    }

    /// Whether the element represented by `v` is zero in the module.
    pub fn is_zero_element(&self, v: &[Polynomial]) -> Result<bool> {
        self.check_element(v)?;
        self.relation_module().contains(v)
    }

    pub fn elements_equal(&self, a: &[Polynomial], b: &[Polynomial]) -> Result<bool> {
        self.is_zero_element(&vector::sub(a, b))
    }

    /// Canonical representative of the class of `v`.
    pub fn normal_form(&self, v: &[Polynomial]) -> Result<Vector> {
        self.check_element(v)?;
        self.relation_module().reduce(v)
    }

    /// Degree of a homogeneous element.
    pub fn element_degree(&self, v: &[Polynomial]) -> Option<i64> {
        vector::vector_degree(v, &self.gen_degrees)
    }

    /// Same module with every generator and relation degree shifted by `d`.
    pub fn twist(&self, d: i64) -> FPModule {
        FPModule::new(
            &self.ring,
            self.gen_degrees.iter().map(|x| x + d).collect(),
            self.rel_degrees.iter().map(|x| x + d).collect(),
            self.relations.clone(),
        )
        .unwrap()
    }

    /// Direct sum.
    pub fn direct_sum(&self, other: &FPModule) -> Result<FPModule> {
        check_ring(&self.ring, &other.ring)?;
        let (g1, g2) = (self.ngens(), other.ngens());
        let mut rels = Vec::new();
        for r in &self.relations {
            let mut v = r.clone();
            v.extend(vector::zero_vector(&self.ring, g2));
            rels.push(v);
        }
        for r in &other.relations {
            let mut v = vector::zero_vector(&self.ring, g1);
            v.extend(r.iter().cloned());
            rels.push(v);
        }
        let mut gd = self.gen_degrees.clone();
        gd.extend(other.gen_degrees.iter().cloned());
        let mut rd = self.rel_degrees.clone();
        rd.extend(other.rel_degrees.iter().cloned());
        FPModule::new(&self.ring, gd, rd, rels)
    }
}

impl fmt::Display for FPModule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "generators of degree {:?}", self.gen_degrees)?;
        for r in &self.relations {
            let row: Vec<String> = r.iter().map(|p| p.to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        Ok(())
    }
}

/// A homogeneous map of graded modules. Row `j` of the matrix is the image
/// of the `j`-th source generator, written on the target generators.
#[derive(Clone, Debug)]
pub struct ModuleMap {
    source: FPModule,
    target: FPModule,
    images: Vec<Vector>,
    degree: i64,
}

impl ModuleMap {
    /// Builds the map and checks that it is homogeneous of degree `degree`
    /// and sends every relation of the source into the target relations.
    pub fn new(source: &FPModule, target: &FPModule, images: Vec<Vector>, degree: i64) -> Result<ModuleMap> {
        check_ring(source.ring(), target.ring())?;
        if images.len() != source.ngens() {
            return Err(Error::InvalidInput(format!(
                "{} images for {} source generators",
                images.len(),
                source.ngens()
            )));
        }
        for (j, img) in images.iter().enumerate() {
            target.check_element(img)?;
            if let Some(d) = target.element_degree(img) {
                if d != source.gen_degrees()[j] + degree {
                    return Err(Error::InvalidInput(format!(
                        "image of generator {j} has degree {d}, expected {}",
                        source.gen_degrees()[j] + degree
                    )));
                }
            } else if !vector::is_zero(img) {
                return Err(Error::InvalidInput(format!("image of generator {j} is not homogeneous")));
            }
        }
        let map = ModuleMap {
            source: source.clone(),
            target: target.clone(),
            images,
            degree,
        };
        for (j, rel) in source.relations().iter().enumerate() {
            let img = map.apply_unchecked(rel);
            if !target.is_zero_element(&img)? {
                return Err(Error::NotWellDefined(format!(
                    "relation {j} of the source is not sent to zero"
                )));
            }
        }
        Ok(map)
    }

    pub fn from_matrix(source: &FPModule, target: &FPModule, m: &PolyMatrix, degree: i64) -> Result<ModuleMap> {
        ModuleMap::new(source, target, m.rows(), degree)
    }

    pub fn identity(m: &FPModule) -> ModuleMap {
        let images = (0..m.ngens()).map(|i| m.generator(i)).collect();
        ModuleMap {
            source: m.clone(),
            target: m.clone(),
            images,
            degree: 0,
        }
    }

    pub fn zero(source: &FPModule, target: &FPModule) -> ModuleMap {
        ModuleMap {
            source: source.clone(),
            target: target.clone(),
            images: vec![target.zero_element(); source.ngens()],
            degree: 0,
        }
    }

    pub fn source(&self) -> &FPModule {
        &self.source
    }

    pub fn target(&self) -> &FPModule {
        &self.target
    }

    pub fn degree(&self) -> i64 {
        self.degree
    }

    pub fn images(&self) -> &[Vector] {
        &self.images
    }

    pub fn matrix(&self) -> PolyMatrix {
        if self.images.is_empty() {
            return PolyMatrix::zero(self.source.ring(), 0, self.target.ngens());
        }
        PolyMatrix::from_rows(self.source.ring(), self.images.clone()).unwrap()
    }

    fn apply_unchecked(&self, v: &[Polynomial]) -> Vector {
        vector::combine(self.source.ring(), self.target.ngens(), v, &self.images)
    }

    pub fn apply(&self, v: &[Polynomial]) -> Result<Vector> {
        self.source.check_element(v)?;
        Ok(self.apply_unchecked(v))
    }

    /// `other ∘ self`.
    pub fn then(&self, other: &ModuleMap) -> Result<ModuleMap> {
        if self.target != other.source {
            return Err(Error::InvalidInput("maps are not composable".into()));
        }
        let images = self
            .images
            .iter()
            .map(|v| other.apply_unchecked(v))
            .collect();
        Ok(ModuleMap {
            source: self.source.clone(),
            target: other.target.clone(),
            images,
            degree: self.degree + other.degree,
        })
    }

    pub fn is_zero(&self) -> Result<bool> {
        for img in &self.images {
            if !self.target.is_zero_element(img)? {
                return Ok(false);
            }
        }
        Ok(true)
    }
}
