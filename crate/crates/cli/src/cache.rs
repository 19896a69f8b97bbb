use std::fs;
use std::io::Write;
use std::path::Path;

use suppvar::kl::{KlCache, KlTable};

use crate::error::CliError;

/// Seed `table` from the cache file at `path`.
///
/// A missing file is a cold start. An unreadable, corrupt or mismatched file
/// is ignored with a warning. Returns the number of columns loaded.
pub fn load(path: &Path, table: &mut KlTable, warnings: &mut Vec<String>) -> usize {
    let text = match fs::read_to_string(path) {
        Ok(t) => t,
        Err(e) if e.kind() == std::io::ErrorKind::NotFound => return 0,
        Err(e) => {
            warnings.push(format!(
                "cannot read cache {}: {e}; starting cold",
                path.display()
            ));
            return 0;
        }
    };
    let cache: KlCache = match serde_json::from_str(&text) {
        Ok(c) => c,
        Err(e) => {
            warnings.push(format!(
                "cache {} is corrupt ({e}); starting cold",
                path.display()
            ));
            return 0;
        }
    };
    let before = table.clone();
    match table.import(&cache) {
        Ok(n) => n,
        Err(e) => {
            *table = before;
            warnings.push(format!(
                "cache {} was written for {} with ell = {} and is ignored: {e}",
                path.display(),
                cache.cartan_type,
                cache.ell
            ));
            0
        }
    }
}

/// Write the table atomically through a sibling temporary file.
pub fn save(path: &Path, table: &KlTable) -> Result<(), CliError> {
    let io = |source| CliError::Io {
        path: path.display().to_string(),
        source,
    };
    let json = serde_json::to_vec(&table.export())?;
    let mut tmp_name = path.as_os_str().to_owned();
    tmp_name.push(".tmp");
    let tmp = Path::new(&tmp_name);
    let mut f = fs::File::create(tmp).map_err(io)?;
    f.write_all(&json).map_err(io)?;
    f.sync_all().map_err(io)?;
    fs::rename(tmp, path).map_err(io)
}
