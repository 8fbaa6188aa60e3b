//! On-disk μ-cache.
//!
//! Binary layout (all integers little-endian):
//!
//! ```text
//! magic    4 bytes  "KLMU"
//! version  u32      1
//! spec     u32 length, then UTF-8 bytes of the group specification
//! count    u64      number of entries
//! entries  count × { u8 len, len bytes: canonical word of y,
//!                    u8 len, len bytes: canonical word of w,
//!                    i64 μ(y,w) }
//! ```
//!
//! Entries are ordered by the index of `w`, then of `y`. The JSON form holds
//! the same data as `{"format", "version", "group", "entries": [[y, w, μ]]}`.

use std::io::{Read, Write};

use serde::{Deserialize, Serialize};

use crate::coxeter::Group;
use crate::error::{Error, Result};
use crate::kl::{KlTable, MuProvider};

const MAGIC: &[u8; 4] = b"KLMU";
pub const CACHE_VERSION: u32 = 1;
const FORMAT_NAME: &str = "coxcells-mu";

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MuCache {
    pub group: String,
    pub entries: Vec<(Vec<u8>, Vec<u8>, i64)>,
}

#[derive(Serialize, Deserialize)]
struct JsonCache {
    format: String,
    version: u32,
    group: String,
    entries: Vec<(Vec<u8>, Vec<u8>, i64)>,
}

impl MuCache {
    pub fn from_table(table: &KlTable, spec: &str) -> Self {
        let g = table.group();
        let mut entries = Vec::with_capacity(table.num_mu_edges());
        for w in 0..g.order() {
            for &(y, m) in table.mu_list(w) {
                entries.push((g.word(y as usize).to_vec(), g.word(w).to_vec(), m));
            }
        }
        MuCache { group: spec.to_string(), entries }
    }

    pub fn write_binary<W: Write>(&self, mut out: W) -> Result<()> {
        out.write_all(MAGIC)?;
        out.write_all(&CACHE_VERSION.to_le_bytes())?;
        out.write_all(&(self.group.len() as u32).to_le_bytes())?;
        out.write_all(self.group.as_bytes())?;
        out.write_all(&(self.entries.len() as u64).to_le_bytes())?;
        for (y, w, m) in &self.entries {
            for word in [y, w] {
                let len = u8::try_from(word.len()).map_err(|_| Error::Format("word too long".into()))?;
                out.write_all(&[len])?;
                out.write_all(word)?;
            }
            out.write_all(&m.to_le_bytes())?;
        }
        Ok(())
    }

    pub fn read_binary<R: Read>(mut input: R) -> Result<Self> {
        let mut buf4 = [0u8; 4];
        input.read_exact(&mut buf4)?;
        if &buf4 != MAGIC {
            return Err(Error::Format("bad μ-cache magic".into()));
        }
        input.read_exact(&mut buf4)?;
        let version = u32::from_le_bytes(buf4);
        if version != CACHE_VERSION {
            return Err(Error::Format(format!("unsupported μ-cache version {version}")));
        }
        input.read_exact(&mut buf4)?;
        let mut spec = vec![0u8; u32::from_le_bytes(buf4) as usize];
        input.read_exact(&mut spec)?;
        let group = String::from_utf8(spec).map_err(|_| Error::Format("group spec is not UTF-8".into()))?;
        let mut buf8 = [0u8; 8];
        input.read_exact(&mut buf8)?;
        let count = u64::from_le_bytes(buf8) as usize;
        let mut entries = Vec::with_capacity(count.min(1 << 24));
        for _ in 0..count {
            let mut words = [Vec::new(), Vec::new()];
            for word in &mut words {
                let mut len = [0u8; 1];
                input.read_exact(&mut len)?;
                *word = vec![0u8; len[0] as usize];
                input.read_exact(word)?;
            }
            input.read_exact(&mut buf8)?;
            let [y, w] = words;
            entries.push((y, w, i64::from_le_bytes(buf8)));
        }
        Ok(MuCache { group, entries })
    }

    pub fn write_json<W: Write>(&self, out: W) -> Result<()> {
        let j = JsonCache {
            format: FORMAT_NAME.into(),
            version: CACHE_VERSION,
            group: self.group.clone(),
            entries: self.entries.clone(),
        };
        serde_json::to_writer(out, &j)?;
        Ok(())
    }

    pub fn read_json<R: Read>(input: R) -> Result<Self> {
        let j: JsonCache = serde_json::from_reader(input)?;
        if j.format != FORMAT_NAME || j.version != CACHE_VERSION {
            return Err(Error::Format(format!("unsupported μ-cache {} v{}", j.format, j.version)));
        }
        Ok(MuCache { group: j.group, entries: j.entries })
    }

    /// Resolve the words against an enumerated group.
    pub fn into_mu_lists(self, g: &Group, spec: &str) -> Result<MuLists> {
        if self.group != spec {
            return Err(Error::Format(format!("μ-cache is for {}, not {spec}", self.group)));
        }
        let resolve = |word: &[u8]| -> Result<usize> {
            let w: Vec<usize> = word.iter().map(|&s| s as usize).collect();
            let idx = g.from_word(&w)?;
            if g.word(idx) != word {
                return Err(Error::Format("μ-cache word is not canonical".into()));
            }
            Ok(idx)
        };
        let mut lists = vec![Vec::new(); g.order()];
        for (y, w, m) in &self.entries {
            lists[resolve(w)?].push((resolve(y)? as u32, *m));
        }
        for l in &mut lists {
            l.sort_unstable();
        }
        Ok(MuLists { lists })
    }
}

/// μ-lists detached from the polynomial table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MuLists {
    lists: Vec<Vec<(u32, i64)>>,
}

impl MuLists {
    pub fn from_table(table: &KlTable) -> Self {
        MuLists { lists: (0..table.group().order()).map(|w| table.mu_list(w).to_vec()).collect() }
    }
}

impl MuProvider for MuLists {
    fn mu_list(&self, w: usize) -> &[(u32, i64)] {
        &self.lists[w]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trips() {
        let g = Group::from_spec("B3").unwrap();
        let t = KlTable::new(g.clone()).unwrap();
        let cache = MuCache::from_table(&t, "B3");
        let mut bin = Vec::new();
        cache.write_binary(&mut bin).unwrap();
        let back = MuCache::read_binary(&bin[..]).unwrap();
        assert_eq!(back, cache);
        let mut again = Vec::new();
        back.write_binary(&mut again).unwrap();
        assert_eq!(again, bin);
        let mut json = Vec::new();
        cache.write_json(&mut json).unwrap();
        assert_eq!(MuCache::read_json(&json[..]).unwrap(), cache);
        let lists = back.into_mu_lists(&g, "B3").unwrap();
        assert_eq!(lists, MuLists::from_table(&t));
    }

    #[test]
    fn rejects_wrong_group() {
        let g = Group::from_spec("A3").unwrap();
        let t = KlTable::new(g.clone()).unwrap();
        let cache = MuCache::from_table(&t, "A3");
        assert!(cache.into_mu_lists(&g, "B3").is_err());
        assert!(MuCache::read_binary(&b"nope"[..]).is_err());
    }
}
