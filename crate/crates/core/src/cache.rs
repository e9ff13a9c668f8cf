//! On-disk cache of serialised reports.
//!
//! One JSON file per `(version, p, algebra, module selector)`. Writes go to a
//! temporary file in the same directory and are renamed into place, so a
//! concurrent reader sees either nothing or a complete report.

use std::fs;
use std::io;
use std::path::{Path, PathBuf};

use crate::cohom::CohomologyReport;
use crate::liealg::AlgebraKind;
use crate::report::{from_json, to_json};
use crate::repr::ModuleLabel;
use crate::VERSION;

/// Environment variable naming the default cache directory.
pub const CACHE_ENV: &str = "MODCOHOM_CACHE";

#[derive(Debug, Clone)]
pub struct Cache {
    dir: PathBuf,
}

impl Cache {
    pub fn new(dir: impl Into<PathBuf>) -> Self {
        Cache { dir: dir.into() }
    }

    /// The cache named by `MODCOHOM_CACHE`, if set and nonempty.
    pub fn from_env() -> Option<Self> {
        std::env::var_os(CACHE_ENV)
            .filter(|v| !v.is_empty())
            .map(Cache::new)
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    pub fn path_for(&self, p: u32, algebra: AlgebraKind, module: &ModuleLabel) -> PathBuf {
        let selector = module.to_string().replace([':', ','], "_");
        self.dir
            .join(format!("v{VERSION}-p{p}-{algebra}-{selector}.json"))
    }

    /// A cached report, or `None` on a miss. Unreadable or stale entries
    /// count as misses.
    pub fn load(&self, p: u32, algebra: AlgebraKind, module: &ModuleLabel) -> Option<CohomologyReport> {
        let text = fs::read_to_string(self.path_for(p, algebra, module)).ok()?;
        from_json(&text)
            .ok()
            .filter(|r| r.p == p && r.algebra == algebra && r.module == *module)
    }

    pub fn store(&self, report: &CohomologyReport) -> io::Result<PathBuf> {
        fs::create_dir_all(&self.dir)?;
        let path = self.path_for(report.p, report.algebra, &report.module);
        let tmp = path.with_extension(format!("json.{}.tmp", std::process::id()));
        fs::write(&tmp, to_json(report, None, false))?;
        fs::rename(&tmp, &path)?;
        Ok(path)
    }

    /// Looks the report up, computing and storing it on a miss.
    pub fn get_or_compute<E>(
        &self,
        p: u32,
        algebra: AlgebraKind,
        module: &ModuleLabel,
        compute: impl FnOnce() -> Result<CohomologyReport, E>,
    ) -> Result<CohomologyReport, E> {
        if let Some(hit) = self.load(p, algebra, module) {
            return Ok(hit);
        }
        let report = compute()?;
        let _ = self.store(&report);
        Ok(report)
    }
}
