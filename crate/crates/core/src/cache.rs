//! Pluggable storage for subgroup lattices and automorphism groups.
//!
//! Keys are canonical byte strings derived from a group's sorted element
//! list, so the same subgroup reached through different ambient groups hits
//! the same entry. Values are lists of index lists (positions inside the
//! keyed group's element list). Implementations decide where bytes live.

use alloc::vec::Vec;

use crate::perm::Perm;

pub trait LatticeCache: Send + Sync {
    fn load(&self, key: &[u8]) -> Option<Vec<u8>>;
    fn store(&self, key: &[u8], value: &[u8]);
}

pub(crate) fn key_for(kind: &[u8], elements: &[&Perm]) -> Vec<u8> {
    let mut key = Vec::with_capacity(kind.len() + 8 + elements.len() * 8);
    key.extend_from_slice(kind);
    let degree = elements.first().map_or(0, |p| p.degree());
    key.extend_from_slice(&(degree as u32).to_le_bytes());
    key.extend_from_slice(&(elements.len() as u32).to_le_bytes());
    for p in elements {
        for &i in p.images() {
            key.extend_from_slice(&i.to_le_bytes());
        }
    }
    key
}

pub(crate) fn encode_lists(lists: &[Vec<u32>]) -> Vec<u8> {
    let mut out = Vec::new();
    out.extend_from_slice(&(lists.len() as u32).to_le_bytes());
    for list in lists {
        out.extend_from_slice(&(list.len() as u32).to_le_bytes());
        for &x in list {
            out.extend_from_slice(&x.to_le_bytes());
        }
    }
    out
}

pub(crate) fn decode_lists(bytes: &[u8]) -> Option<Vec<Vec<u32>>> {
    let mut words = bytes
        .chunks_exact(4)
        .map(|c| u32::from_le_bytes([c[0], c[1], c[2], c[3]]));
    if !bytes.len().is_multiple_of(4) {
        return None;
    }
    let n = words.next()? as usize;
    let mut lists = Vec::with_capacity(n.min(1 << 16));
    for _ in 0..n {
        let len = words.next()? as usize;
        let mut list = Vec::with_capacity(len.min(1 << 16));
        for _ in 0..len {
            list.push(words.next()?);
        }
        lists.push(list);
    }
    if words.next().is_some() {
        return None;
    }
    Some(lists)
}
