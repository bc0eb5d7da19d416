//! Text formats for trees, permutations and elements.
//!
//! ```text
//! tree    := "." | "(" tree "," tree ")"
//! perm    := "[" int ("," int)* "]"
//! element := tree "|" tree "|" perm
//! ```
//!
//! Whitespace is ignored everywhere. Error offsets are byte offsets into the
//! original input.

use crate::element::Element;
use crate::error::{Error, Result};
use crate::perm::Permutation;
use crate::tree::Tree;

struct Cursor<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn new(src: &'a str) -> Self {
        Cursor {
            src: src.as_bytes(),
            pos: 0,
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn expect(&mut self, byte: u8) -> Result<()> {
        match self.peek() {
            Some(b) if b == byte => {
                self.pos += 1;
                Ok(())
            }
            Some(b) => Err(Error::parse(
                self.pos,
                format!("expected '{}', found '{}'", byte as char, b as char),
            )),
            None => Err(Error::parse(
                self.pos,
                format!("expected '{}', found end of input", byte as char),
            )),
        }
    }

    fn finish(&mut self) -> Result<()> {
        match self.peek() {
            None => Ok(()),
            Some(b) => Err(Error::parse(
                self.pos,
                format!("unexpected trailing '{}'", b as char),
            )),
        }
    }

    fn tree(&mut self) -> Result<Tree> {
        // explicit stack so that deep combs cannot overflow the call stack
        enum Frame {
            AwaitLeft,
            AwaitRight(Tree),
        }
        let mut stack: Vec<Frame> = Vec::new();
        loop {
            let mut done = match self.peek() {
                Some(b'.') => {
                    self.pos += 1;
                    Tree::Leaf
                }
                Some(b'(') => {
                    self.pos += 1;
                    stack.push(Frame::AwaitLeft);
                    continue;
                }
                Some(b) => {
                    return Err(Error::parse(
                        self.pos,
                        format!("expected '.' or '(', found '{}'", b as char),
                    ))
                }
                None => {
                    return Err(Error::parse(
                        self.pos,
                        "expected '.' or '(', found end of input",
                    ))
                }
            };
            loop {
                match stack.pop() {
                    None => return Ok(done),
                    Some(Frame::AwaitLeft) => {
                        self.expect(b',')?;
                        stack.push(Frame::AwaitRight(done));
                        break;
                    }
                    Some(Frame::AwaitRight(left)) => {
                        self.expect(b')')?;
                        done = Tree::caret(left, done);
                    }
                }
            }
        }
    }

    fn int(&mut self) -> Result<usize> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(Error::parse(start, "expected an integer"));
        }
        std::str::from_utf8(&self.src[start..self.pos])
            .expect("digits are ascii")
            .parse()
            .map_err(|_| Error::parse(start, "integer too large"))
    }

    fn perm(&mut self) -> Result<(usize, Permutation)> {
        self.skip_ws();
        let at = self.pos;
        self.expect(b'[')?;
        let mut images = vec![self.int()?];
        while self.peek() == Some(b',') {
            self.pos += 1;
            images.push(self.int()?);
        }
        self.expect(b']')?;
        let perm = Permutation::from_one_based(&images).map_err(|e| match e {
            Error::InvalidPermutation(msg) => Error::parse(at, msg),
            other => other,
        })?;
        Ok((at, perm))
    }
}

pub fn parse_tree(text: &str) -> Result<Tree> {
    let mut c = Cursor::new(text);
    let t = c.tree()?;
    c.finish()?;
    Ok(t)
}

pub fn parse_permutation(text: &str) -> Result<Permutation> {
    let mut c = Cursor::new(text);
    let (_, p) = c.perm()?;
    c.finish()?;
    Ok(p)
}

pub fn parse_element(text: &str) -> Result<Element> {
    let mut c = Cursor::new(text);
    let domain = c.tree()?;
    c.expect(b'|')?;
    let range = c.tree()?;
    c.expect(b'|')?;
    let (at, perm) = c.perm()?;
    c.finish()?;
    Element::new(domain, range, perm).map_err(|e| match e {
        Error::LeafCountMismatch { .. } => Error::parse(at, e.to_string()),
        other => other,
    })
}
