//! Recursive-descent parser.
//!
//! Precedence, loosest first: `fun`/`forall`/`exists` (extend right), `->`
//! (right associative), `**` (right associative), `<=`/`<`, application,
//! atoms with `.1`/`.2` postfixes.

use super::lexer::{lex, Pos, Tok, Token};
use super::surface::{Binder, Decl, Expr, Param};
use super::SyntaxError;

const KEYWORDS: &[&str] = &[
    "def", "axiom", "import", "fun", "forall", "exists", "U", "Size", "Bool", "Top", "Bot", "El",
    "Id", "refl", "J", "boolind", "topind", "botind", "exind", "expair", "fix", "fixb", "tt",
    "ff", "star", "type",
];

pub fn is_keyword(s: &str) -> bool {
    KEYWORDS.contains(&s)
}

type Result<T> = std::result::Result<T, SyntaxError>;

pub fn parse_file(src: &str) -> Result<Vec<Decl>> {
    let mut p = Parser::new(src)?;
    let mut out = Vec::new();
    while p.peek() != &Tok::Eof {
        out.push(p.decl()?);
    }
    Ok(out)
}

pub fn parse_expr(src: &str) -> Result<Expr> {
    let mut p = Parser::new(src)?;
    let e = p.expr()?;
    p.expect(Tok::Eof, "end of input")?;
    Ok(e)
}

struct Parser {
    toks: Vec<Token>,
    i: usize,
}

fn bx(e: Expr) -> Box<Expr> {
    Box::new(e)
}

impl Parser {
    fn new(src: &str) -> Result<Self> {
        Ok(Parser {
            toks: lex(src)?,
            i: 0,
        })
    }

    fn peek(&self) -> &Tok {
        &self.toks[self.i].tok
    }

    fn peek_at(&self, k: usize) -> &Tok {
        &self.toks[(self.i + k).min(self.toks.len() - 1)].tok
    }

    fn pos(&self) -> Pos {
        self.toks[self.i].pos
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.i].tok.clone();
        if self.i + 1 < self.toks.len() {
            self.i += 1;
        }
        t
    }

    fn error<T>(&self, what: &str) -> Result<T> {
        Err(SyntaxError::new(
            self.pos(),
            format!("expected {what}, found {}", describe(self.peek())),
        ))
    }

    fn expect(&mut self, t: Tok, what: &str) -> Result<()> {
        if *self.peek() == t {
            self.bump();
            Ok(())
        } else {
            self.error(what)
        }
    }

    fn is_kw(&self, kw: &str) -> bool {
        matches!(self.peek(), Tok::Ident(s) if s == kw)
    }

    fn name(&mut self) -> Result<String> {
        match self.peek().clone() {
            Tok::Ident(s) if !is_keyword(&s) => {
                self.bump();
                Ok(s)
            }
            _ => self.error("a name"),
        }
    }

    fn decl(&mut self) -> Result<Decl> {
        let pos = self.pos();
        if self.is_kw("import") {
            self.bump();
            return match self.bump() {
                Tok::Str(path) => Ok(Decl::Import { path, pos }),
                _ => Err(SyntaxError::new(pos, "expected a quoted path after import")),
            };
        }
        let is_def = self.is_kw("def");
        if !is_def && !self.is_kw("axiom") {
            return self.error("`def`, `axiom` or `import`");
        }
        self.bump();
        let name = self.name()?;
        let params = self.params()?;
        self.expect(Tok::Colon, "`:` and a type")?;
        let ty = self.expr()?;
        if !is_def {
            return Ok(Decl::Axiom {
                name,
                params,
                ty,
                pos,
            });
        }
        self.expect(Tok::Assign, "`:=`")?;
        let body = self.expr()?;
        Ok(Decl::Def {
            name,
            params,
            ty,
            body,
            pos,
        })
    }

    fn params(&mut self) -> Result<Vec<Param>> {
        let mut out = Vec::new();
        while *self.peek() == Tok::LParen {
            self.bump();
            let mut names = vec![self.name()?];
            while let Tok::Ident(s) = self.peek() {
                if is_keyword(s) {
                    break;
                }
                names.push(self.name()?);
            }
            self.expect(Tok::Colon, "`:` in a parameter group")?;
            let ty = self.expr()?;
            self.expect(Tok::RParen, "`)`")?;
            out.push(Param { names, ty });
        }
        Ok(out)
    }

    pub fn expr(&mut self) -> Result<Expr> {
        if self.is_kw("fun") {
            self.bump();
            let forall = *self.peek() == Tok::Caret;
            if forall {
                self.bump();
            }
            let mut names = vec![self.name()?];
            while *self.peek() != Tok::FatArrow {
                names.push(self.name()?);
            }
            self.bump();
            let body = bx(self.expr()?);
            return Ok(if forall {
                Expr::ForLam(names, body)
            } else {
                Expr::Lam(names, body)
            });
        }
        if self.is_kw("forall") || self.is_kw("exists") {
            let forall = self.is_kw("forall");
            self.bump();
            let name = self.name()?;
            let bound = if *self.peek() == Tok::Lt {
                self.bump();
                Some(bx(self.app()?))
            } else {
                None
            };
            self.expect(Tok::Dot, "`.` after the quantified size")?;
            let body = bx(self.expr()?);
            return Ok(if forall {
                Expr::Forall(name, bound, body)
            } else {
                Expr::Exists(name, bound, body)
            });
        }
        self.arrow()
    }

    /// A telescope `(x y : A)` immediately followed by `->` or `**`.
    fn telescope(&mut self) -> Result<Option<(Vec<String>, Expr)>> {
        if *self.peek() != Tok::LParen {
            return Ok(None);
        }
        let mut k = 1;
        while matches!(self.peek_at(k), Tok::Ident(s) if !is_keyword(s)) {
            k += 1;
        }
        if k == 1 || *self.peek_at(k) != Tok::Colon {
            return Ok(None);
        }
        let save = self.i;
        self.bump();
        let mut names = Vec::new();
        for _ in 1..k {
            names.push(self.name()?);
        }
        self.bump();
        let ty = self.expr()?;
        self.expect(Tok::RParen, "`)`")?;
        if matches!(self.peek(), Tok::Arrow | Tok::Star2) {
            Ok(Some((names, ty)))
        } else {
            self.i = save;
            Ok(None)
        }
    }

    fn arrow(&mut self) -> Result<Expr> {
        let lhs = match self.telescope()? {
            Some((names, dom)) => {
                if *self.peek() == Tok::Arrow {
                    self.bump();
                    return Ok(Expr::Pi(names, bx(dom), bx(self.expr()?)));
                }
                self.bump();
                Expr::Sigma(names, bx(dom), bx(self.prod_rhs()?))
            }
            None => self.prod()?,
        };
        if *self.peek() == Tok::Arrow {
            self.bump();
            return Ok(Expr::Pi(vec![], bx(lhs), bx(self.expr()?)));
        }
        Ok(lhs)
    }

    fn prod(&mut self) -> Result<Expr> {
        if let Some((names, dom)) = self.telescope()? {
            if *self.peek() == Tok::Arrow {
                // A dependent Π inside a product must be parenthesized.
                return self.error("`**` (parenthesize the Π-type)");
            }
            self.bump();
            return Ok(Expr::Sigma(names, bx(dom), bx(self.prod_rhs()?)));
        }
        let lhs = self.cmp()?;
        if *self.peek() == Tok::Star2 {
            self.bump();
            return Ok(Expr::Sigma(vec![], bx(lhs), bx(self.prod_rhs()?)));
        }
        Ok(lhs)
    }

    fn prod_rhs(&mut self) -> Result<Expr> {
        if self.is_kw("fun") || self.is_kw("forall") || self.is_kw("exists") {
            self.expr()
        } else {
            self.prod()
        }
    }

    fn cmp(&mut self) -> Result<Expr> {
        let lhs = self.app()?;
        match self.peek() {
            Tok::Le => {
                self.bump();
                Ok(Expr::Leq(bx(lhs), bx(self.app()?)))
            }
            Tok::Lt => {
                self.bump();
                Ok(Expr::Lt(bx(lhs), bx(self.app()?)))
            }
            _ => Ok(lhs),
        }
    }

    fn starts_atom(&self) -> bool {
        match self.peek() {
            Tok::Ident(s) => {
                !is_keyword(s)
                    || matches!(
                        s.as_str(),
                        "U" | "Size" | "Bool" | "Top" | "Bot" | "tt" | "ff" | "star"
                    )
            }
            Tok::Num(_) | Tok::Zero | Tok::LParen => true,
            _ => false,
        }
    }

    fn app(&mut self) -> Result<Expr> {
        let mut head = self.head()?;
        loop {
            if *self.peek() == Tok::LBrace {
                self.bump();
                let s = self.expr()?;
                self.expect(Tok::RBrace, "`}`")?;
                head = Expr::ForApp(bx(head), bx(s));
            } else if self.starts_atom() {
                let a = self.arg()?;
                head = Expr::App(bx(head), bx(a));
            } else {
                return Ok(head);
            }
        }
    }

    fn binder(&mut self, arity: usize, what: &str) -> Result<Binder> {
        self.expect(Tok::LParen, what)?;
        let mut names = Vec::new();
        for _ in 0..arity {
            names.push(self.name()?);
        }
        self.expect(Tok::Dot, "`.` after the bound names")?;
        let body = bx(self.expr()?);
        self.expect(Tok::RParen, "`)`")?;
        Ok(Binder { names, body })
    }

    fn head(&mut self) -> Result<Expr> {
        let kw = match self.peek() {
            Tok::Ident(s) => s.clone(),
            Tok::Caret => {
                self.bump();
                return Ok(Expr::Suc(bx(self.arg()?)));
            }
            Tok::Bang => {
                self.bump();
                return Ok(Expr::Raw(bx(self.arg()?)));
            }
            _ => return self.arg(),
        };
        let one = |p: &mut Self, f: fn(Box<Expr>) -> Expr| -> Result<Expr> {
            p.bump();
            Ok(f(bx(p.arg()?)))
        };
        match kw.as_str() {
            "El" => one(self, Expr::El),
            "type" => one(self, Expr::TypeEsc),
            "refl" => one(self, Expr::Refl),
            "fix" => one(self, Expr::Fix),
            "fixb" => one(self, Expr::FixBeta),
            "Id" => {
                self.bump();
                let a = self.arg()?;
                let x = self.arg()?;
                let y = self.arg()?;
                Ok(Expr::Id(bx(a), bx(x), bx(y)))
            }
            "expair" => {
                self.bump();
                let s = self.arg()?;
                let a = self.arg()?;
                Ok(Expr::ExPair(bx(s), bx(a)))
            }
            "J" => {
                self.bump();
                let motive = self.binder(3, "a motive `(x y q. P)`")?;
                let base = self.binder(1, "a base case `(x. b)`")?;
                let lhs = bx(self.arg()?);
                let rhs = bx(self.arg()?);
                let path = bx(self.arg()?);
                Ok(Expr::J {
                    motive,
                    base,
                    lhs,
                    rhs,
                    path,
                })
            }
            "botind" => {
                self.bump();
                let motive = self.binder(1, "a motive `(z. P)`")?;
                let scrut = bx(self.arg()?);
                Ok(Expr::BotInd { motive, scrut })
            }
            "topind" => {
                self.bump();
                let motive = self.binder(1, "a motive `(z. P)`")?;
                let base = bx(self.arg()?);
                let scrut = bx(self.arg()?);
                Ok(Expr::TopInd {
                    motive,
                    base,
                    scrut,
                })
            }
            "boolind" => {
                self.bump();
                let motive = self.binder(1, "a motive `(z. P)`")?;
                let on_tt = bx(self.arg()?);
                let on_ff = bx(self.arg()?);
                let scrut = bx(self.arg()?);
                Ok(Expr::BoolInd {
                    motive,
                    on_tt,
                    on_ff,
                    scrut,
                })
            }
            "exind" => {
                self.bump();
                let motive = self.binder(1, "a motive `(z. P)`")?;
                let branch = self.binder(2, "a branch `(i x. p)`")?;
                let scrut = bx(self.arg()?);
                Ok(Expr::ExInd {
                    motive,
                    branch,
                    scrut,
                })
            }
            _ => self.arg(),
        }
    }

    /// An atom followed by any number of projections.
    fn arg(&mut self) -> Result<Expr> {
        let mut e = self.atom()?;
        while let Tok::Proj(k) = *self.peek() {
            self.bump();
            e = Expr::Proj(k, bx(e));
        }
        Ok(e)
    }

    fn atom(&mut self) -> Result<Expr> {
        let pos = self.pos();
        match self.peek().clone() {
            Tok::Ident(s) => {
                let e = match s.as_str() {
                    "U" => Expr::Univ,
                    "Size" => Expr::SizeTy,
                    "Bool" => Expr::BoolTy,
                    "Top" => Expr::TopTy,
                    "Bot" => Expr::BotTy,
                    "tt" => Expr::Tt,
                    "ff" => Expr::Ff,
                    "star" => Expr::Star,
                    _ if is_keyword(&s) => return self.error("an expression"),
                    _ => Expr::Ident(s, pos),
                };
                self.bump();
                Ok(e)
            }
            Tok::Num(n) => {
                self.bump();
                Ok(Expr::Num(n))
            }
            Tok::Zero => {
                self.bump();
                Ok(Expr::Zero)
            }
            Tok::LParen => {
                self.bump();
                let e = self.expr()?;
                let e = match self.peek() {
                    // (a, b, c) nests to the right.
                    Tok::Comma => {
                        let mut items = vec![e];
                        while *self.peek() == Tok::Comma {
                            self.bump();
                            items.push(self.expr()?);
                        }
                        let last = items.pop().unwrap();
                        items.into_iter().rev().fold(last, |acc, a| Expr::Pair(bx(a), bx(acc)))
                    }
                    Tok::Colon => {
                        self.bump();
                        let t = self.expr()?;
                        Expr::Ann(bx(e), bx(t))
                    }
                    _ => e,
                };
                self.expect(Tok::RParen, "`)`")?;
                Ok(e)
            }
            _ => self.error("an expression"),
        }
    }
}

fn describe(t: &Tok) -> String {
    match t {
        Tok::Ident(s) => format!("`{s}`"),
        Tok::Num(n) => format!("`{n}`"),
        Tok::Str(s) => format!("\"{s}\""),
        Tok::Eof => "end of input".into(),
        other => format!("{other:?}"),
    }
}
