//! Brute-force classification over the translation-quiver model.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use crate::classifier::{CategoryType, Order};
use crate::error::{Error, Result};
use crate::ncp::{ar_bijection_f, ar_bijection_g, sigma};
use crate::report::CheckReport;
use crate::root_coxeter::{DynkinType, NcInterval, RootSystem, Series};

use super::labels::LabelWalk;
use super::quiver::{phi, phi_triality, VertexMap};
use super::thick::{image_roots, is_invariant_vertex_set, ThickDescriptor};

/// Root system, label walk and one descriptor per interval element.
#[derive(Debug)]
pub struct DerivedModel {
    rs: RootSystem,
    walk: LabelWalk,
    nc: NcInterval,
    descriptors: Vec<ThickDescriptor>,
    by_roots: HashMap<Vec<usize>, usize>,
}

impl DerivedModel {
    pub fn new(delta: DynkinType) -> Self {
        let rs = RootSystem::new(delta);
        let walk = LabelWalk::new(&rs);
        let nc = rs.enumerate_nc();
        let descriptors: Vec<ThickDescriptor> = nc
            .iter()
            .map(|w| ThickDescriptor::from_parts(&rs, w.clone(), rs.roots_below_unchecked(w)))
            .collect();
        let by_roots = descriptors.iter().enumerate().map(|(i, d)| (d.roots().to_vec(), i)).collect();
        Self { rs, walk, nc, descriptors, by_roots }
    }

    /// A process-wide cached model; built once per Dynkin type.
    pub fn shared(delta: DynkinType) -> Arc<DerivedModel> {
        type Slot = Arc<OnceLock<Arc<DerivedModel>>>;
        static CACHE: OnceLock<Mutex<HashMap<DynkinType, Slot>>> = OnceLock::new();
        let slot = {
            let mut map = CACHE.get_or_init(Default::default).lock().expect("cache lock");
            map.entry(delta).or_default().clone()
        };
        slot.get_or_init(|| Arc::new(DerivedModel::new(delta))).clone()
    }

    pub fn root_system(&self) -> &RootSystem {
        &self.rs
    }

    pub fn walk(&self) -> &LabelWalk {
        &self.walk
    }

    pub fn interval(&self) -> &NcInterval {
        &self.nc
    }

    /// Descriptors in the order of [`Self::interval`].
    pub fn descriptors(&self) -> &[ThickDescriptor] {
        &self.descriptors
    }

    /// Interval position of the element whose root set is `roots`.
    pub fn index_of_roots(&self, roots: &[usize]) -> Option<usize> {
        self.by_roots.get(roots).copied()
    }

    /// Image of descriptor `i` under `g`, if it is again a descriptor.
    pub fn image_index(&self, i: usize, g: &VertexMap) -> Option<usize> {
        self.index_of_roots(&image_roots(&self.walk, &self.descriptors[i], g)?)
    }

    /// Interval positions of the `g`-invariant descriptors.
    pub fn invariant_indices(&self, g: &VertexMap) -> Vec<usize> {
        (0..self.descriptors.len()).filter(|&i| is_invariant_vertex_set(&self.walk, &self.descriptors[i], g)).collect()
    }

    /// The generator `φ^{[t≠1]} ∘ τ^r` of the type.
    pub fn generator(ct: &CategoryType) -> Result<VertexMap> {
        let delta = ct.delta();
        let tau_r = VertexMap::tau_pow(delta.rank(), ct.r() as i64);
        let phi_map = match ct.t() {
            Order::One => return Ok(tau_r),
            Order::Three => phi_triality(),
            Order::Two | Order::Infinite => phi(&delta).ok_or_else(|| Error::InvalidType(ct.to_string()))?,
        };
        Ok(phi_map.compose(&tau_r))
    }

    /// Interval positions of the thick subcategories of the orbit category of type `ct`.
    pub fn brute_force_indices(&self, ct: &CategoryType) -> Result<Vec<usize>> {
        if ct.delta() != self.rs.delta() {
            return Err(Error::InvalidType(format!("{ct} on a model of {}", self.rs.delta())));
        }
        Ok(self.invariant_indices(&Self::generator(ct)?))
    }

    pub fn brute_force_classify(&self, ct: &CategoryType) -> Result<Vec<ThickDescriptor>> {
        Ok(self.brute_force_indices(ct)?.into_iter().map(|i| self.descriptors[i].clone()).collect())
    }

    /// `φ` acts on descriptors as `σ` acts on D-partitions.
    pub fn phi_fixes_sigma_on_nc(&self) -> Result<CheckReport> {
        let delta = self.rs.delta();
        if delta.series() != Series::D {
            return Err(Error::WrongSeries { expected: 'D', actual: delta.series().letter() });
        }
        let phi_map = phi(&delta).expect("type D has phi");
        let mut report = CheckReport::new(format!("{delta}: phi acts as sigma"));
        for (i, w) in self.nc.iter().enumerate() {
            let expected = ar_bijection_g(&self.rs, &sigma(&ar_bijection_f(&self.rs, w)?))?;
            let got = self.image_index(i, &phi_map).map(|j| self.nc.elements()[j].clone());
            report.record(got.as_ref() == Some(&expected), || format!("{w:?}: phi image {got:?}"));
        }
        Ok(report)
    }

    /// `cox·w·cox⁻¹` corresponds to `τ` applied to the vertex set.
    pub fn tau_equivariance(&self) -> CheckReport {
        let mut report = CheckReport::new(format!("{}: tau equivariance", self.rs.delta()));
        let tau = VertexMap::tau_pow(self.rs.rank(), 1);
        for (i, w) in self.nc.iter().enumerate() {
            let conj = self.rs.conjugate_by_cox(w, 1);
            let got = self.image_index(i, &tau);
            report.record(got == self.nc.position(&conj), || format!("{w:?}"));
        }
        report
    }

    /// Descriptors invariant under `S^m ∘ τ⁻¹`; only the empty and the
    /// full one should survive.
    pub fn cluster_category_check(&self, m: i64) -> CheckReport {
        let g = self.walk.suspension().pow(m).compose(&VertexMap::tau_pow(self.rs.rank(), -1));
        let inv = self.invariant_indices(&g);
        let mut report = CheckReport::new(format!("{}: cluster category, m = {m}", self.rs.delta()));
        report.record(inv.len() == 2, || format!("{} invariant descriptors", inv.len()));
        for i in inv {
            let d = &self.descriptors[i];
            report.record(d.is_empty() || d.is_full(), || format!("proper invariant {:?}", d.nc_element()));
        }
        report
    }
}

/// Brute-force classification on a cached model.
pub fn brute_force_classify(ct: &CategoryType) -> Result<Vec<ThickDescriptor>> {
    DerivedModel::shared(ct.delta()).brute_force_classify(ct)
}
