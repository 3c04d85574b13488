//! On-disk cache of character tables, keyed by n.

use std::fs;
use std::path::PathBuf;

use jackd_core::jack_oracle::CharacterTable;

pub struct CharacterCache {
    dir: PathBuf,
}

impl CharacterCache {
    pub fn new(dir: PathBuf) -> Self {
        CharacterCache { dir }
    }

    fn path(&self, n: usize) -> PathBuf {
        self.dir.join(format!("character-table-{n}.json"))
    }

    /// The cached table if it is present and valid, else a fresh one written
    /// back to disk. Write failures leave the computed table usable.
    pub fn table(&self, n: usize) -> jackd_core::Result<CharacterTable> {
        let path = self.path(n);
        if let Some(t) = fs::read(&path)
            .ok()
            .and_then(|bytes| serde_json::from_slice::<CharacterTable>(&bytes).ok())
            .filter(|t| t.is_valid_for(n))
        {
            return Ok(t);
        }
        let table = CharacterTable::build(n)?;
        if fs::create_dir_all(&self.dir).is_ok() {
            let tmp = path.with_extension(format!("json.tmp{}", std::process::id()));
            let json = serde_json::to_vec(&table).expect("character tables serialize");
            if fs::write(&tmp, json).is_ok() && fs::rename(&tmp, &path).is_err() {
                let _ = fs::remove_file(&tmp);
            }
        }
        Ok(table)
    }
}
