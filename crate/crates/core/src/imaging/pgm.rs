//! Binary (P5) 8-bit PGM.

use std::fs;
use std::path::Path;

use crate::error::{Error, Result};
use crate::tv::ImageGrid;

struct Cursor<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl Cursor<'_> {
    fn skip_whitespace_and_comments(&mut self) {
        while let Some(&b) = self.bytes.get(self.pos) {
            if b == b'#' {
                while self.bytes.get(self.pos).is_some_and(|&c| c != b'\n') {
                    self.pos += 1;
                }
            } else if b.is_ascii_whitespace() {
                self.pos += 1;
            } else {
                break;
            }
        }
    }

    fn number(&mut self, what: &str) -> Result<usize> {
        self.skip_whitespace_and_comments();
        let start = self.pos;
        while self.bytes.get(self.pos).is_some_and(u8::is_ascii_digit) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(Error::Format(format!("PGM header: expected {what}")));
        }
        std::str::from_utf8(&self.bytes[start..self.pos])
            .ok()
            .and_then(|s| s.parse().ok())
            .ok_or_else(|| Error::Format(format!("PGM header: {what} out of range")))
    }
}

pub fn decode_pgm(bytes: &[u8]) -> Result<ImageGrid> {
    if bytes.len() < 2 || &bytes[..2] != b"P5" {
        return Err(Error::Format("not a binary PGM (missing P5 magic)".into()));
    }
    let mut cur = Cursor { bytes, pos: 2 };
    let cols = cur.number("width")?;
    let rows = cur.number("height")?;
    let maxval = cur.number("maxval")?;
    if maxval != 255 {
        return Err(Error::Format(format!(
            "unsupported PGM maxval {maxval}; only 8-bit (255) is supported"
        )));
    }
    match bytes.get(cur.pos) {
        Some(b) if b.is_ascii_whitespace() => cur.pos += 1,
        _ => {
            return Err(Error::Format(
                "PGM header: missing separator before pixel data".into(),
            ))
        }
    }
    let n = rows
        .checked_mul(cols)
        .ok_or_else(|| Error::Format("PGM dimensions overflow".into()))?;
    let payload = &bytes[cur.pos..];
    if payload.len() < n {
        return Err(Error::Format(format!(
            "truncated PGM payload: expected {n} bytes, found {}",
            payload.len()
        )));
    }
    let data = payload[..n].iter().map(|&b| f64::from(b)).collect();
    ImageGrid::new(rows, cols, data)
}

/// Clamps to `[0, 255]` and rounds half to even.
pub fn encode_pgm(u: &ImageGrid) -> Vec<u8> {
    let mut out = format!("P5\n{} {}\n255\n", u.cols(), u.rows()).into_bytes();
    out.extend(
        u.as_slice()
            .iter()
            .map(|&v| v.clamp(0.0, 255.0).round_ties_even() as u8),
    );
    out
}

pub fn read_pgm(path: impl AsRef<Path>) -> Result<ImageGrid> {
    decode_pgm(&fs::read(path)?)
}

pub fn write_pgm(path: impl AsRef<Path>, u: &ImageGrid) -> Result<()> {
    fs::write(path, encode_pgm(u))?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn decodes_2x2() {
        let mut bytes = b"P5\n2 2\n255\n".to_vec();
        bytes.extend([0u8, 1, 2, 3]);
        let u = decode_pgm(&bytes).unwrap();
        assert_eq!(u.shape(), (2, 2));
        assert_eq!(u.as_slice(), &[0.0, 1.0, 2.0, 3.0]);
    }

    #[test]
    fn header_comments_are_skipped() {
        let mut bytes = b"P5\n# made by hand\n3 2\n# depth\n255\n".to_vec();
        bytes.extend([9u8; 6]);
        assert_eq!(decode_pgm(&bytes).unwrap().shape(), (2, 3));
    }

    #[test]
    fn rejects_malformed() {
        let mut deep = b"P5\n2 2\n65535\n".to_vec();
        deep.extend([0u8; 8]);
        assert!(matches!(decode_pgm(&deep), Err(Error::Format(m)) if m.contains("maxval")));
        assert!(decode_pgm(b"P2\n2 2\n255\n0 1 2 3").is_err());
        assert!(
            matches!(decode_pgm(b"P5\n2 2\n255\n\x00\x01"), Err(Error::Format(m)) if m.contains("truncated"))
        );
        assert!(decode_pgm(b"P5\n2\n").is_err());
    }

    #[test]
    fn encode_clamps_and_rounds_half_even() {
        let u = ImageGrid::new(2, 2, vec![-3.0, 300.0, 2.5, 3.5]).unwrap();
        let bytes = encode_pgm(&u);
        assert_eq!(&bytes[bytes.len() - 4..], &[0, 255, 2, 4]);
    }

    proptest! {
        #[test]
        fn round_trip_integer_grids((rows, cols, pixels) in (2usize..12, 2usize..12)
            .prop_flat_map(|(r, c)| (Just(r), Just(c), proptest::collection::vec(any::<u8>(), r * c))))
        {
            let u = ImageGrid::new(rows, cols, pixels.iter().map(|&b| f64::from(b)).collect()).unwrap();
            prop_assert_eq!(decode_pgm(&encode_pgm(&u)).unwrap(), u);
        }
    }
}
