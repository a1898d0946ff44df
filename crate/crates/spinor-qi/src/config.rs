//! Experiment configuration: TOML with one `kind` selector and exactly
//! one matching parameter block. Unknown keys are rejected.

use serde::Deserialize;

use epr_engine::{CutoffProfile, DetectorRegion, RepChoice};
use massive_rep::GaugeSpec;
use photon_rep::{EPRKernel, LightconeGrid, Packet};

use crate::error::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Kind {
    Pst,
    Epr,
    Chsh,
    Norms,
    Delta,
    Wigner,
    Demo,
}

impl Kind {
    pub fn name(&self) -> &'static str {
        match self {
            Kind::Pst => "pst",
            Kind::Epr => "epr",
            Kind::Chsh => "chsh",
            Kind::Norms => "norms",
            Kind::Delta => "delta",
            Kind::Wigner => "wigner",
            Kind::Demo => "demo",
        }
    }
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ConfigFile {
    pub kind: Kind,
    pub pst: Option<PstParams>,
    pub epr: Option<EprParams>,
    pub chsh: Option<ChshParams>,
    pub norms: Option<NormsParams>,
    pub delta: Option<DeltaCfg>,
    pub wigner: Option<WignerParams>,
    pub demo: Option<DemoParams>,
}

impl ConfigFile {
    pub fn parse(text: &str) -> Result<Self, CliError> {
        let cfg: ConfigFile =
            toml::from_str(text).map_err(|e| CliError::config(e.to_string()))?;
        cfg.validate()?;
        Ok(cfg)
    }

    /// Exactly the block matching `kind` must be present.
    fn validate(&self) -> Result<(), CliError> {
        let blocks: [(Kind, bool); 7] = [
            (Kind::Pst, self.pst.is_some()),
            (Kind::Epr, self.epr.is_some()),
            (Kind::Chsh, self.chsh.is_some()),
            (Kind::Norms, self.norms.is_some()),
            (Kind::Delta, self.delta.is_some()),
            (Kind::Wigner, self.wigner.is_some()),
            (Kind::Demo, self.demo.is_some()),
        ];
        for (k, present) in blocks {
            if k == self.kind && !present {
                return Err(CliError::config(format!(
                    "kind = \"{}\" but the [{}] block is missing",
                    k.name(),
                    k.name()
                )));
            }
            if k != self.kind && present {
                return Err(CliError::config(format!(
                    "parameter block [{}] does not match kind = \"{}\"",
                    k.name(),
                    self.kind.name()
                )));
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PstParams {
    pub mass: f64,
    pub grid_n: usize,
    pub grid_center: [f64; 3],
    pub grid_half_width: f64,
    pub profile_center: [f64; 3],
    pub profile_sigma: f64,
    pub spin: [f64; 2],
    pub rapidity: f64,
    pub boost_dir: [f64; 3],
}

#[derive(Debug, Clone, Copy, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GridSpec {
    pub center: [f64; 3],
    pub half_width: f64,
    pub n: usize,
}

impl GridSpec {
    pub fn build(&self) -> Result<LightconeGrid, CliError> {
        Ok(LightconeGrid::cubic(self.center, self.half_width, self.n)?)
    }
}

#[derive(Debug, Clone, Copy, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PacketSpec {
    pub center: [f64; 3],
    pub sigma: f64,
}

impl PacketSpec {
    pub fn build(&self) -> Packet {
        Packet { center: self.center, sigma: self.sigma }
    }
}

#[derive(Debug, Clone, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum KernelSpec {
    ProductAntisym { f: PacketSpec, g: PacketSpec },
    ScalarSquare,
    Coincident { c: f64 },
}

impl KernelSpec {
    pub fn build(&self, grid: &LightconeGrid) -> EPRKernel {
        match self {
            KernelSpec::ProductAntisym { f, g } => {
                EPRKernel::product_antisym(grid.clone(), f.build(), g.build())
            }
            KernelSpec::ScalarSquare => EPRKernel::scalar_f2(grid.clone()),
            KernelSpec::Coincident { c } => EPRKernel::same_momentum_psi2(grid.clone(), *c),
        }
    }
}

#[derive(Debug, Clone, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum ShapeSpec {
    Ball { center: [f64; 3], radius: f64 },
    HalfSpace { normal: [f64; 3], offset: f64 },
    All,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RegionSpec {
    pub shape: ShapeSpec,
    #[serde(default)]
    pub complement: bool,
}

impl RegionSpec {
    pub fn build(&self, grid: &LightconeGrid) -> DetectorRegion {
        let base = match &self.shape {
            ShapeSpec::Ball { center, radius } => DetectorRegion::ball(grid, *center, *radius),
            ShapeSpec::HalfSpace { normal, offset } => {
                DetectorRegion::half_space(grid, *normal, *offset)
            }
            ShapeSpec::All => DetectorRegion::all(grid),
        };
        if self.complement {
            base.complement()
        } else {
            base
        }
    }
}

#[derive(Debug, Clone, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum ProfileSpec {
    Uniform,
    Gaussian { center: [f64; 3], sigma: f64 },
}

impl ProfileSpec {
    pub fn build(&self, grid: &LightconeGrid) -> Result<CutoffProfile, CliError> {
        Ok(match self {
            ProfileSpec::Uniform => CutoffProfile::uniform(grid.clone())?,
            ProfileSpec::Gaussian { center, sigma } => {
                CutoffProfile::gaussian(grid.clone(), *center, *sigma)?
            }
        })
    }
}

#[derive(Debug, Clone, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum RepSpec {
    Irreducible,
    Reducible { n: u32, profile: ProfileSpec },
}

impl RepSpec {
    pub fn build(&self, grid: &LightconeGrid) -> Result<RepChoice, CliError> {
        Ok(match self {
            RepSpec::Irreducible => RepChoice::Irreducible,
            RepSpec::Reducible { n, profile } => {
                RepChoice::Reducible { n: *n, o0: profile.build(grid)? }
            }
        })
    }
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EprParams {
    pub grid: GridSpec,
    pub kernel: KernelSpec,
    pub omega: RegionSpec,
    pub omega_prime: RegionSpec,
    pub rep: RepSpec,
    pub alpha: f64,
    pub beta: f64,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ChshParams {
    pub grid: GridSpec,
    pub kernel: KernelSpec,
    pub omega: RegionSpec,
    pub omega_prime: RegionSpec,
    pub rep: RepSpec,
    /// (a₁, a₂, b₁, b₂)
    pub angles: [f64; 4],
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct NormsParams {
    pub grid: GridSpec,
    pub kernel: KernelSpec,
    pub profile: ProfileSpec,
    pub powers: Vec<u32>,
    /// cross-check the closed forms against the truncated oscillator
    /// oracle (kept small: grid cells ≤ 3, powers ≤ 3)
    #[serde(default)]
    pub oracle_check: bool,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DeltaCfg {
    pub a: f64,
    pub eps: f64,
    /// half-width and sample count of the emitted curves
    pub x_max: f64,
    pub samples: usize,
    /// half-width of the emitted transform curve
    pub transform_x_max: f64,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct WignerParams {
    pub mass: f64,
    pub p3: [f64; 3],
    pub gauge: GaugeSpec,
    pub rotation_angle: f64,
    pub boost_dir: [f64; 3],
    pub boost_rapidity: f64,
    /// massless momentum direction for the phase computation
    pub k3: [f64; 3],
}

#[derive(Debug, Clone, Deserialize, Default)]
#[serde(deny_unknown_fields)]
pub struct DemoParams {}
