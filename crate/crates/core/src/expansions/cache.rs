//! On-disk digit cache, content-addressed by canonical spec id and base.
//!
//! File format:
//!
//! ```text
//! DIGITS v1
//! id=<canonical-spec> base=<b> count=<N>
//! cert=<tail-bound-name> prec=<bits>
//! <digit characters, 80 per line>
//! ```
//!
//! Writes go to a temporary file in the cache directory followed by an
//! atomic rename, so concurrent runs never observe a torn file.  A cached
//! prefix at least as long as the request is reused by truncation; shorter
//! prefixes trigger full regeneration.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use super::generate::{certify_integer_part, generate_digits_capped, Certificate, CertifiedDigits};
use super::spec::ConstantSpec;
use super::ExpansionError;
use crate::words::{word_from_text, Alphabet};

const LINE_WIDTH: usize = 80;

#[derive(Debug, Clone)]
pub struct DigitCache {
    dir: PathBuf,
}

fn io_err(e: std::io::Error) -> ExpansionError {
    ExpansionError::Io(e.to_string())
}

fn sanitize(id: &str) -> String {
    id.chars()
        .map(|c| {
            if c.is_ascii_alphanumeric() || matches!(c, '.' | '_' | '-') {
                c
            } else {
                '_'
            }
        })
        .collect()
}

pub(crate) fn render_cache_file(cd: &CertifiedDigits) -> String {
    let mut out = format!(
        "DIGITS v1\nid={} base={} count={}\ncert={} prec={}\n",
        cd.spec.canonical_id(),
        cd.base().size(),
        cd.count(),
        cd.certificate.tail_bound,
        cd.certificate.precision_bits,
    );
    let digits = cd.digits.to_string();
    for chunk in digits.as_bytes().chunks(LINE_WIDTH) {
        out.push_str(std::str::from_utf8(chunk).expect("ascii digits"));
        out.push('\n');
    }
    out
}

struct CacheEntry {
    spec: ConstantSpec,
    base: Alphabet,
    certificate: Certificate,
    digits: crate::words::SymbolWord,
}

fn parse_cache_file(text: &str) -> Result<CacheEntry, ExpansionError> {
    let bad = |msg: String| ExpansionError::BadCache(msg);
    let mut lines = text.lines();
    match lines.next() {
        Some("DIGITS v1") => {}
        other => return Err(bad(format!("bad magic line: {other:?}"))),
    }
    let meta = lines.next().ok_or_else(|| bad("missing id line".into()))?;
    let mut id = None;
    let mut base = None;
    let mut count = None;
    for field in meta.split_whitespace() {
        if let Some(v) = field.strip_prefix("id=") {
            id = Some(v.to_string());
        } else if let Some(v) = field.strip_prefix("base=") {
            base = v.parse::<u32>().ok();
        } else if let Some(v) = field.strip_prefix("count=") {
            count = v.parse::<usize>().ok();
        }
    }
    let id = id.ok_or_else(|| bad("missing id=".into()))?;
    let base = base.ok_or_else(|| bad("missing base=".into()))?;
    let count = count.ok_or_else(|| bad("missing count=".into()))?;
    let cert_line = lines
        .next()
        .ok_or_else(|| bad("missing cert line".into()))?;
    let mut cert = None;
    let mut prec = None;
    for field in cert_line.split_whitespace() {
        if let Some(v) = field.strip_prefix("cert=") {
            cert = Some(v.to_string());
        } else if let Some(v) = field.strip_prefix("prec=") {
            prec = v.parse::<u32>().ok();
        }
    }
    let cert = cert.ok_or_else(|| bad("missing cert=".into()))?;
    let prec = prec.ok_or_else(|| bad("missing prec=".into()))?;
    let spec: ConstantSpec = id
        .parse()
        .map_err(|e| bad(format!("bad spec id {id:?}: {e}")))?;
    let alphabet = Alphabet::new(base).map_err(|e| bad(e.to_string()))?;
    let mut digit_text = String::with_capacity(count);
    for line in lines {
        digit_text.push_str(line);
    }
    if digit_text.len() != count {
        return Err(bad(format!(
            "digit count mismatch: header says {count}, found {}",
            digit_text.len()
        )));
    }
    let digits = word_from_text(&digit_text, alphabet).map_err(|e| bad(e.to_string()))?;
    Ok(CacheEntry {
        spec,
        base: alphabet,
        certificate: Certificate {
            tail_bound: cert,
            precision_bits: prec,
        },
        digits,
    })
}

impl DigitCache {
    pub fn new(dir: impl Into<PathBuf>) -> Result<Self, ExpansionError> {
        let dir = dir.into();
        fs::create_dir_all(&dir).map_err(io_err)?;
        Ok(DigitCache { dir })
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    fn path_for(&self, spec: &ConstantSpec, base: Alphabet) -> PathBuf {
        self.dir.join(format!(
            "{}-b{}.digits",
            sanitize(&spec.canonical_id()),
            base.size()
        ))
    }

    /// Loads the cached prefix for `(spec, base)`, if present and well
    /// formed with a matching canonical id.
    pub fn read(
        &self,
        spec: &ConstantSpec,
        base: Alphabet,
        cap_bits: u32,
    ) -> Result<Option<CertifiedDigits>, ExpansionError> {
        let path = self.path_for(spec, base);
        let text = match fs::read_to_string(&path) {
            Ok(t) => t,
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Ok(None),
            Err(e) => return Err(io_err(e)),
        };
        let entry = parse_cache_file(&text)?;
        if entry.spec != *spec || entry.base != base {
            // filename collision; treat as a miss
            return Ok(None);
        }
        let int_part = certify_integer_part(spec, cap_bits)?;
        Ok(Some(CertifiedDigits {
            spec: entry.spec,
            int_part,
            digits: entry.digits,
            certificate: entry.certificate,
        }))
    }

    /// Writes (or replaces) the cached prefix via temp-file-and-rename.
    pub fn write(&self, cd: &CertifiedDigits) -> Result<(), ExpansionError> {
        let path = self.path_for(&cd.spec, cd.base());
        let mut tmp = tempfile::NamedTempFile::new_in(&self.dir).map_err(io_err)?;
        tmp.write_all(render_cache_file(cd).as_bytes())
            .map_err(io_err)?;
        tmp.persist(&path)
            .map_err(|e| ExpansionError::Io(e.to_string()))?;
        Ok(())
    }

    /// Returns `count` certified digits, reusing a long-enough cached
    /// prefix or regenerating (and re-caching) from scratch.
    pub fn get_or_generate(
        &self,
        spec: &ConstantSpec,
        base: Alphabet,
        count: usize,
        cap_bits: u32,
    ) -> Result<CertifiedDigits, ExpansionError> {
        if let Some(cached) = self.read(spec, base, cap_bits)? {
            if cached.count() >= count {
                return Ok(cached.truncated(count));
            }
        }
        let generated = generate_digits_capped(spec, base, count, cap_bits)?;
        self.write(&generated)?;
        Ok(generated)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::expansions::generate_digits;

    #[test]
    fn cache_file_roundtrip_is_bit_identical() {
        let spec: ConstantSpec = "kmosek_shallit".parse().unwrap();
        let cd = generate_digits(&spec, Alphabet::binary(), 16).unwrap();
        let text = render_cache_file(&cd);
        let entry = parse_cache_file(&text).unwrap();
        assert_eq!(entry.digits, cd.digits);
        assert_eq!(entry.certificate, cd.certificate);
        let again = render_cache_file(&CertifiedDigits {
            spec: entry.spec,
            int_part: cd.int_part.clone(),
            digits: entry.digits,
            certificate: entry.certificate,
        });
        assert_eq!(text, again);
    }

    #[test]
    fn get_or_generate_reuses_and_extends() {
        let dir = tempfile::tempdir().unwrap();
        let cache = DigitCache::new(dir.path()).unwrap();
        let spec: ConstantSpec = "e".parse().unwrap();
        let base = Alphabet::new(10).unwrap();

        let long = cache.get_or_generate(&spec, base, 40, 1 << 16).unwrap();
        let short = cache.get_or_generate(&spec, base, 10, 1 << 16).unwrap();
        assert_eq!(short.digits, long.digits.prefix(10));
        assert_eq!(short.int_part, long.int_part);

        // extension regenerates (and stores the longer prefix)
        let longer = cache.get_or_generate(&spec, base, 60, 1 << 16).unwrap();
        assert_eq!(longer.digits.prefix(40), long.digits);
        let stored = cache.read(&spec, base, 1 << 16).unwrap().unwrap();
        assert_eq!(stored.count(), 60);
    }

    #[test]
    fn mismatched_file_is_a_miss() {
        let dir = tempfile::tempdir().unwrap();
        let cache = DigitCache::new(dir.path()).unwrap();
        let spec: ConstantSpec = "sqrt(2)".parse().unwrap();
        let other: ConstantSpec = "sqrt(3)".parse().unwrap();
        let cd = generate_digits(&spec, Alphabet::binary(), 12).unwrap();
        // write under the wrong key by hand
        let path = dir.path().join("sqrt_3_-b2.digits");
        std::fs::write(&path, render_cache_file(&cd)).unwrap();
        assert!(cache
            .read(&other, Alphabet::binary(), 1 << 16)
            .unwrap()
            .is_none());
    }
}
