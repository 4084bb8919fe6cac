#include "ra/dsl.hpp"

#include <cctype>
#include <optional>

namespace ra {

namespace {

enum class Tok {
  End,
  Int,
  Ident,
  Plus,
  Minus,
  Star,
  Slash,
  Caret,
  LParen,
  RParen,
  Comma,
  Apos,
  XiNormSq  // the literal |xi|^2
};

struct Lexer {
  std::string src;
  size_t pos = 0;
  Tok tok = Tok::End;
  long ival = 0;
  std::string ident;

  explicit Lexer(std::string s) : src(std::move(s)) { next(); }

  [[noreturn]] void fail(const std::string& m) const {
    throw SymbolError("parse error at offset " + std::to_string(pos) + ": " + m);
  }

  void next() {
    while (pos < src.size() && std::isspace(static_cast<unsigned char>(src[pos])))
      ++pos;
    if (pos >= src.size()) {
      tok = Tok::End;
      return;
    }
    char c = src[pos];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      ival = 0;
      while (pos < src.size() && std::isdigit(static_cast<unsigned char>(src[pos])))
        ival = ival * 10 + (src[pos++] - '0');
      tok = Tok::Int;
      return;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      ident.clear();
      while (pos < src.size() &&
             std::isalnum(static_cast<unsigned char>(src[pos])))
        ident += src[pos++];
      tok = Tok::Ident;
      return;
    }
    if (c == '|') {
      if (src.compare(pos, 6, "|xi|^2") == 0) {
        pos += 6;
        tok = Tok::XiNormSq;
        return;
      }
      fail("expected |xi|^2");
    }
    ++pos;
    switch (c) {
      case '+': tok = Tok::Plus; return;
      case '-': tok = Tok::Minus; return;
      case '*': tok = Tok::Star; return;
      case '/': tok = Tok::Slash; return;
      case '^': tok = Tok::Caret; return;
      case '(': tok = Tok::LParen; return;
      case ')': tok = Tok::RParen; return;
      case ',': tok = Tok::Comma; return;
      case '\'': tok = Tok::Apos; return;
      default: fail(std::string("unexpected character '") + c + "'");
    }
  }

  void expect(Tok t, const char* what) {
    if (tok != t) fail(std::string("expected ") + what);
    next();
  }

  long expect_int(const char* what) {
    if (tok != Tok::Int) fail(std::string("expected ") + what);
    long v = ival;
    next();
    return v;
  }
};

struct Parser {
  Lexer lx;
  int n, l;

  Parser(const std::string& s, int n, int l) : lx(s), n(n), l(l) {}

  BoundarySymbol scalar(const ExactScalar& c) {
    CliffordElem e = CliffordElem::identity(n).scaled(c);
    return make_symbol(n, 0, 0, {e});
  }

  BoundarySymbol scalar(const Poly& p) {
    CliffordElem e = CliffordElem::identity(n).scaled(p);
    return make_symbol(n, 0, 0, {e});
  }

  BoundarySymbol xi_norm_sq() {
    return make_symbol(
        n, 0, 0,
        {CliffordElem::identity(n).scaled(s2_poly(n)), CliffordElem::zero(n),
         CliffordElem::identity(n)});
  }

  // is this a pure constant scalar multiple of the identity?
  std::optional<ExactScalar> as_constant(const BoundarySymbol& s) {
    if (s.is_zero()) return ExactScalar(0);
    if (s.p || s.q || s.num.size() != 1) return std::nullopt;
    const CliffordElem& c = s.num[0];
    if (c.b.size() != 1 || c.b.begin()->first != 0u) return std::nullopt;
    const Poly& p = c.b.begin()->second;
    if (p.t.size() != 1 || !p.t.begin()->first.f.empty()) return std::nullopt;
    return p.t.begin()->second;
  }

  BoundarySymbol parse_vector() {
    if (lx.tok != Tok::Ident) lx.fail("expected vector name");
    std::string id = lx.ident;
    lx.next();
    // the lexer glues trailing digits onto the name ("e1", "X2")
    long glued = -1;
    if (id.size() > 1 &&
        id.find_first_not_of("0123456789", 1) == std::string::npos) {
      glued = std::stol(id.substr(1));
      id = id.substr(0, 1);
    }
    auto index = [&](const char* what) {
      return glued >= 0 ? glued : lx.expect_int(what);
    };
    if (id == "e") {
      long k = index("basis index");
      if (k < 1 || k > n) lx.fail("basis index out of range");
      return make_symbol(n, 0, 0, {CliffordElem::basis(n, 1u << (k - 1))});
    }
    if (id == "xi") {
      if (lx.tok == Tok::Apos) {
        lx.next();
        return make_symbol(n, 0, 0, {c_vector_xi_tangential(n)});
      }
      return make_symbol(n, 0, 0, {c_vector_xi_tangential(n), c_normal(n)});
    }
    if (id == "dxn") return make_symbol(n, 0, 0, {c_normal(n)});
    if (id == "X") {
      long j = index("vector index");
      if (j < 1 || j > l) lx.fail("vector index out of range");
      std::vector<Poly> comps;
      for (int al = 1; al <= n; ++al)
        comps.push_back(Poly::atom(atom_a(static_cast<int>(j), al)));
      return make_symbol(n, 0, 0, {clifford_from_vector(n, comps)});
    }
    lx.fail("unknown vector '" + id + "'");
  }

  BoundarySymbol parse_factor() {
    BoundarySymbol v;
    if (lx.tok == Tok::Int) {
      v = scalar(ExactScalar(Rational(lx.ival)));
      lx.next();
    } else if (lx.tok == Tok::XiNormSq) {
      lx.next();
      v = xi_norm_sq();
    } else if (lx.tok == Tok::LParen) {
      lx.next();
      v = parse_expr();
      lx.expect(Tok::RParen, "')'");
    } else if (lx.tok == Tok::Ident) {
      std::string id = lx.ident;
      lx.next();
      if (id == "i") {
        v = scalar(ExactScalar::unit_i());
      } else if (id == "h1") {
        v = scalar(Poly::atom(kHPrime));
      } else if (id == "xin") {
        v = make_symbol(n, 0, 0,
                        {CliffordElem::zero(n), CliffordElem::identity(n)});
      } else if (id == "a" || id == "xi") {
        lx.expect(Tok::LParen, "'('");
        long j = lx.expect_int("index");
        if (id == "a") {
          lx.expect(Tok::Comma, "','");
          long k = lx.expect_int("index");
          lx.expect(Tok::RParen, "')'");
          v = scalar(Poly::atom(atom_a(static_cast<int>(j), static_cast<int>(k))));
        } else {
          lx.expect(Tok::RParen, "')'");
          if (j < 1 || j > n - 1) lx.fail("xi index out of range");
          v = scalar(Poly::atom(atom_xi(static_cast<int>(j))));
        }
      } else if (id == "c") {
        lx.expect(Tok::LParen, "'('");
        v = parse_vector();
        lx.expect(Tok::RParen, "')'");
      } else if (id == "pip" || id == "dxin" || id == "dxn" || id == "tr" ||
                 id == "res" || id == "sph") {
        lx.expect(Tok::LParen, "'('");
        BoundarySymbol arg = parse_expr();
        lx.expect(Tok::RParen, "')'");
        if (id == "pip")
          v = pi_plus(arg);
        else if (id == "dxin")
          v = d_xi_n(arg);
        else if (id == "dxn")
          v = d_x_n(arg);
        else if (id == "tr")
          v = trace_symbol(arg);
        else if (id == "sph")
          v = sphere_average(arg);
        else
          v = scalar(integrate_gamma_plus(arg));
      } else {
        lx.fail("unknown name '" + id + "'");
      }
    } else {
      lx.fail("expected a factor");
    }
    while (lx.tok == Tok::Caret) {
      lx.next();
      long e = lx.expect_int("exponent");
      if (e < 0) lx.fail("negative exponent");
      BoundarySymbol acc = symbol_one(n);
      for (long t = 0; t < e; ++t) acc = symbol_mul(acc, v);
      v = acc;
    }
    return v;
  }

  BoundarySymbol parse_term() {
    BoundarySymbol acc = parse_factor();
    while (lx.tok == Tok::Star || lx.tok == Tok::Slash) {
      bool divide = lx.tok == Tok::Slash;
      lx.next();
      if (divide && lx.tok == Tok::XiNormSq) {
        lx.next();
        long e = 1;
        if (lx.tok == Tok::Caret) {
          lx.next();
          e = lx.expect_int("exponent");
        }
        acc = make_symbol(n, acc.p + static_cast<int>(e),
                          acc.q + static_cast<int>(e), acc.num);
        continue;
      }
      BoundarySymbol rhs = parse_factor();
      if (divide) {
        auto c = as_constant(rhs);
        if (!c || c->is_zero())
          lx.fail("division is only defined for nonzero constants and |xi|^2");
        acc = symbol_scale(acc, c->inv());
      } else {
        acc = symbol_mul(acc, rhs);
      }
    }
    return acc;
  }

  BoundarySymbol parse_expr() {
    bool neg = false;
    if (lx.tok == Tok::Minus) {
      neg = true;
      lx.next();
    }
    BoundarySymbol acc = parse_term();
    if (neg) acc = symbol_neg(acc);
    while (lx.tok == Tok::Plus || lx.tok == Tok::Minus) {
      bool sub = lx.tok == Tok::Minus;
      lx.next();
      BoundarySymbol t = parse_term();
      acc = sub ? symbol_sub(acc, t) : symbol_add(acc, t);
    }
    return acc;
  }
};

}  // namespace

BoundarySymbol parse_symbol(const std::string& src, int n, int l) {
  Parser p(src, n, l);
  BoundarySymbol v = p.parse_expr();
  if (p.lx.tok != Tok::End) p.lx.fail("trailing input");
  return v;
}

}  // namespace ra
