#include "inqkh/syntax.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <sstream>

namespace inqkh {

namespace {

FormulaPtr mk(Kind k, std::string name, int tk, int tn, std::vector<FormulaPtr> args) {
  return std::make_shared<const Formula>(k, std::move(name), tk, tn, std::move(args));
}

}  // namespace

FormulaPtr atom(const std::string& name) { return mk(Kind::Atom, name, 0, 0, {}); }
FormulaPtr bottom() { return mk(Kind::Bottom, "", 0, 0, {}); }
FormulaPtr conj(FormulaPtr a, FormulaPtr b) { return mk(Kind::And, "", 0, 0, {std::move(a), std::move(b)}); }
FormulaPtr disj(FormulaPtr a, FormulaPtr b) { return mk(Kind::Or, "", 0, 0, {std::move(a), std::move(b)}); }
FormulaPtr implies(FormulaPtr a, FormulaPtr b) { return mk(Kind::Implies, "", 0, 0, {std::move(a), std::move(b)}); }

FormulaPtr tensor(int k, int n, std::vector<FormulaPtr> args) {
  if (n < 2 || k < 1 || k > n)
    throw StructureError("tensor signature requires n >= 2 and 1 <= k <= n, got k=" +
                         std::to_string(k) + ", n=" + std::to_string(n));
  if (static_cast<int>(args.size()) != n)
    throw StructureError("tensor[" + std::to_string(k) + "," + std::to_string(n) + "] expects " +
                         std::to_string(n) + " arguments, got " + std::to_string(args.size()));
  return mk(Kind::Tensor, "", k, n, std::move(args));
}

FormulaPtr know(FormulaPtr a) { return mk(Kind::K, "", 0, 0, {std::move(a)}); }

FormulaPtr knowHow(FormulaPtr a) {
  if (!isPropositional(a))
    throw StructureError("Kh requires a propositional body, got: " + render(a));
  return mk(Kind::Kh, "", 0, 0, {std::move(a)});
}

FormulaPtr forall(const std::string& p, FormulaPtr body) {
  return mk(Kind::Forall, p, 0, 0, {std::move(body)});
}

FormulaPtr announce(FormulaPtr announced, FormulaPtr body) {
  return mk(Kind::Announce, "", 0, 0, {std::move(announced), std::move(body)});
}

FormulaPtr neg(FormulaPtr a) { return implies(std::move(a), bottom()); }
FormulaPtr top() { return implies(bottom(), bottom()); }
FormulaPtr iff(FormulaPtr a, FormulaPtr b) { return conj(implies(a, b), implies(b, a)); }
FormulaPtr exists(const std::string& p, FormulaPtr body) {
  return neg(forall(p, neg(std::move(body))));
}

bool isTop(const FormulaPtr& f) {
  return f->kind == Kind::Implies && f->args[0]->kind == Kind::Bottom &&
         f->args[1]->kind == Kind::Bottom;
}

bool splitIff(const FormulaPtr& f, FormulaPtr& a, FormulaPtr& b) {
  if (f->kind != Kind::And) return false;
  const auto& l = f->args[0];
  const auto& r = f->args[1];
  if (l->kind != Kind::Implies || r->kind != Kind::Implies) return false;
  if (!equal(l->args[0], r->args[1]) || !equal(l->args[1], r->args[0])) return false;
  a = l->args[0];
  b = l->args[1];
  return true;
}

int compare(const FormulaPtr& a, const FormulaPtr& b) {
  if (a.get() == b.get()) return 0;
  if (a->kind != b->kind) return a->kind < b->kind ? -1 : 1;
  if (int c = a->name.compare(b->name)) return c < 0 ? -1 : 1;
  if (a->tensorK != b->tensorK) return a->tensorK < b->tensorK ? -1 : 1;
  if (a->tensorN != b->tensorN) return a->tensorN < b->tensorN ? -1 : 1;
  if (a->args.size() != b->args.size()) return a->args.size() < b->args.size() ? -1 : 1;
  for (std::size_t i = 0; i < a->args.size(); ++i)
    if (int c = compare(a->args[i], b->args[i])) return c;
  return 0;
}

bool equal(const FormulaPtr& a, const FormulaPtr& b) { return compare(a, b) == 0; }

std::size_t hashOf(const FormulaPtr& f) {
  std::size_t h = static_cast<std::size_t>(f->kind) * 0x9e3779b97f4a7c15ull;
  h ^= std::hash<std::string>{}(f->name) + 0x9e3779b9 + (h << 6) + (h >> 2);
  h ^= static_cast<std::size_t>(f->tensorK * 31 + f->tensorN);
  for (const auto& a : f->args) h ^= hashOf(a) + 0x9e3779b9 + (h << 6) + (h >> 2);
  return h;
}

bool isPropositional(const FormulaPtr& f) {
  switch (f->kind) {
    case Kind::K:
    case Kind::Kh:
    case Kind::Forall:
    case Kind::Announce:
      return false;
    default:
      for (const auto& a : f->args)
        if (!isPropositional(a)) return false;
      return true;
  }
}

bool containsKind(const FormulaPtr& f, Kind k) {
  if (f->kind == k) return true;
  for (const auto& a : f->args)
    if (containsKind(a, k)) return true;
  return false;
}

namespace {

void freeAtomsInto(const FormulaPtr& f, std::set<std::string>& bound,
                   std::set<std::string>& out) {
  if (f->kind == Kind::Atom) {
    if (!bound.count(f->name)) out.insert(f->name);
    return;
  }
  if (f->kind == Kind::Forall) {
    bool wasBound = bound.count(f->name) > 0;
    bound.insert(f->name);
    freeAtomsInto(f->args[0], bound, out);
    if (!wasBound) bound.erase(f->name);
    return;
  }
  for (const auto& a : f->args) freeAtomsInto(a, bound, out);
}

}  // namespace

std::set<std::string> freeAtoms(const FormulaPtr& f) {
  std::set<std::string> bound, out;
  freeAtomsInto(f, bound, out);
  return out;
}

std::set<std::string> allAtoms(const FormulaPtr& f) {
  std::set<std::string> out;
  std::function<void(const FormulaPtr&)> go = [&](const FormulaPtr& g) {
    if (g->kind == Kind::Atom) out.insert(g->name);
    if (g->kind == Kind::Forall) out.insert(g->name);
    for (const auto& a : g->args) go(a);
  };
  go(f);
  return out;
}

bool occursFree(const FormulaPtr& f, const std::string& p) {
  if (f->kind == Kind::Atom) return f->name == p;
  if (f->kind == Kind::Forall && f->name == p) return false;
  for (const auto& a : f->args)
    if (occursFree(a, p)) return true;
  return false;
}

namespace {

FormulaPtr substituteRec(const FormulaPtr& f, const std::string& p, const FormulaPtr& g,
                         std::vector<std::string>& binders, const std::set<std::string>& gFree) {
  if (f->kind == Kind::Atom) {
    if (f->name != p) return f;
    for (const auto& b : binders)
      if (gFree.count(b))
        throw StructureError("substitution would capture atom '" + b + "' at an occurrence of '" +
                             p + "'");
    return g;
  }
  if (f->kind == Kind::Forall) {
    if (f->name == p) return f;
    binders.push_back(f->name);
    auto body = substituteRec(f->args[0], p, g, binders, gFree);
    binders.pop_back();
    return body == f->args[0] ? f : forall(f->name, body);
  }
  if (f->kind == Kind::Kh && occursFree(f->args[0], p) && !isPropositional(g))
    throw StructureError("substituting a modal formula under Kh is ill-formed");
  bool changed = false;
  std::vector<FormulaPtr> args;
  args.reserve(f->args.size());
  for (const auto& a : f->args) {
    auto a2 = substituteRec(a, p, g, binders, gFree);
    changed = changed || a2 != a;
    args.push_back(a2);
  }
  if (!changed) return f;
  return std::make_shared<const Formula>(f->kind, f->name, f->tensorK, f->tensorN,
                                         std::move(args));
}

}  // namespace

FormulaPtr substitute(const FormulaPtr& f, const std::string& p, const FormulaPtr& g) {
  std::vector<std::string> binders;
  auto gFree = freeAtoms(g);
  return substituteRec(f, p, g, binders, gFree);
}

std::string freshAtom(const std::set<std::string>& avoid) {
  for (std::size_t i = 0;; ++i) {
    std::string cand = "_q" + std::to_string(i);
    if (!avoid.count(cand)) return cand;
  }
}

// --- lexer ------------------------------------------------------------------

namespace {

enum class Tok {
  Ident, Bot, Top, KwK, KwKh, KwForall, KwExists, KwBox, KwTensor,
  Tilde, Amp, Pipe, OPlus, Arrow, Iff, LPar, RPar, LBrack, RBrack,
  Lt, Gt, Dot, Comma, Eq, Int, End
};

struct Token {
  Tok kind;
  std::string text;
  long value = 0;
  std::size_t pos = 0;
};

class Lexer {
 public:
  explicit Lexer(const std::string& s) : src_(s) { advance(); }
  const Token& peek() const { return cur_; }
  Token take() {
    Token t = cur_;
    advance();
    return t;
  }

 private:
  bool startsWith(const char* u) {
    return src_.compare(i_, std::char_traits<char>::length(u), u) == 0;
  }

  void advance() {
    while (i_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[i_]))) ++i_;
    cur_.pos = i_;
    if (i_ >= src_.size()) {
      cur_ = {Tok::End, "", 0, i_};
      return;
    }
    struct Uni { const char* seq; Tok tok; };
    static const Uni unis[] = {
        {"⊥", Tok::Bot}, {"⊤", Tok::Top}, {"¬", Tok::Tilde},
        {"∧", Tok::Amp}, {"∨", Tok::Pipe}, {"⊗", Tok::OPlus},
        {"→", Tok::Arrow}, {"↔", Tok::Iff}, {"∀", Tok::KwForall},
        {"∃", Tok::KwExists},
    };
    for (const auto& u : unis) {
      if (startsWith(u.seq)) {
        std::size_t len = std::char_traits<char>::length(u.seq);
        cur_ = {u.tok, src_.substr(i_, len), 0, i_};
        i_ += len;
        return;
      }
    }
    char c = src_[i_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i_;
      while (j < src_.size() && std::isdigit(static_cast<unsigned char>(src_[j]))) ++j;
      cur_ = {Tok::Int, src_.substr(i_, j - i_), std::stol(src_.substr(i_, j - i_)), i_};
      i_ = j;
      return;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i_;
      while (j < src_.size() &&
             (std::isalnum(static_cast<unsigned char>(src_[j])) || src_[j] == '_'))
        ++j;
      std::string w = src_.substr(i_, j - i_);
      i_ = j;
      Tok k = Tok::Ident;
      if (w == "bot") k = Tok::Bot;
      else if (w == "top") k = Tok::Top;
      else if (w == "K") k = Tok::KwK;
      else if (w == "Kh") k = Tok::KwKh;
      else if (w == "forall") k = Tok::KwForall;
      else if (w == "exists") k = Tok::KwExists;
      else if (w == "box") k = Tok::KwBox;
      else if (w == "tensor") k = Tok::KwTensor;
      cur_ = {k, w, 0, cur_.pos};
      return;
    }
    if (startsWith("<->")) { cur_ = {Tok::Iff, "<->", 0, i_}; i_ += 3; return; }
    if (startsWith("->")) { cur_ = {Tok::Arrow, "->", 0, i_}; i_ += 2; return; }
    if (startsWith("(+)")) { cur_ = {Tok::OPlus, "(+)", 0, i_}; i_ += 3; return; }
    Tok k;
    switch (c) {
      case '~': k = Tok::Tilde; break;
      case '&': k = Tok::Amp; break;
      case '|': k = Tok::Pipe; break;
      case '(': k = Tok::LPar; break;
      case ')': k = Tok::RPar; break;
      case '[': k = Tok::LBrack; break;
      case ']': k = Tok::RBrack; break;
      case '<': k = Tok::Lt; break;
      case '>': k = Tok::Gt; break;
      case '.': k = Tok::Dot; break;
      case ',': k = Tok::Comma; break;
      case '=': k = Tok::Eq; break;
      default:
        throw ParseError(i_, std::string("unexpected character '") + c + "'");
    }
    cur_ = {k, std::string(1, c), 0, i_};
    ++i_;
  }

  const std::string& src_;
  std::size_t i_ = 0;
  Token cur_;
};

// --- parser -----------------------------------------------------------------

class Parser {
 public:
  explicit Parser(const std::string& s) : lex_(s) {}

  FormulaPtr parseAll() {
    auto f = parseIff();
    if (lex_.peek().kind != Tok::End)
      throw ParseError(lex_.peek().pos, "trailing input '" + lex_.peek().text + "'");
    return f;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) { throw ParseError(lex_.peek().pos, msg); }

  Token expect(Tok k, const char* what) {
    if (lex_.peek().kind != k) fail(std::string("expected ") + what);
    return lex_.take();
  }

  FormulaPtr parseIff() {
    auto a = parseImp();
    while (lex_.peek().kind == Tok::Iff) {
      lex_.take();
      a = iff(a, parseImp());
    }
    return a;
  }

  FormulaPtr parseImp() {
    auto a = parseDisj();
    if (lex_.peek().kind == Tok::Arrow) {
      lex_.take();
      return implies(a, parseImp());
    }
    return a;
  }

  FormulaPtr parseDisj() {
    auto a = parseConj();
    if (lex_.peek().kind == Tok::Pipe) {
      while (lex_.peek().kind == Tok::Pipe) {
        lex_.take();
        a = disj(a, parseConj());
      }
      if (lex_.peek().kind == Tok::OPlus)
        fail("cannot mix | and (+) without parentheses");
    } else if (lex_.peek().kind == Tok::OPlus) {
      while (lex_.peek().kind == Tok::OPlus) {
        lex_.take();
        a = tensor(1, 2, {a, parseConj()});
      }
      if (lex_.peek().kind == Tok::Pipe)
        fail("cannot mix | and (+) without parentheses");
    }
    return a;
  }

  FormulaPtr parseConj() {
    auto a = parseUnary();
    while (lex_.peek().kind == Tok::Amp) {
      lex_.take();
      a = conj(a, parseUnary());
    }
    return a;
  }

  FormulaPtr parseUnary() {
    switch (lex_.peek().kind) {
      case Tok::Tilde:
        lex_.take();
        return neg(parseUnary());
      case Tok::KwK:
        lex_.take();
        return know(parseUnary());
      case Tok::KwKh: {
        auto t = lex_.take();
        auto body = parseUnary();
        if (!isPropositional(body))
          throw ParseError(t.pos, "Kh requires a propositional body");
        return knowHow(body);
      }
      case Tok::LBrack: {
        lex_.take();
        auto a = parseIff();
        expect(Tok::RBrack, "']'");
        return announce(a, parseUnary());
      }
      case Tok::Lt: {
        lex_.take();
        auto a = parseIff();
        expect(Tok::Gt, "'>'");
        return neg(announce(a, neg(parseUnary())));
      }
      case Tok::KwForall: {
        lex_.take();
        auto p = expect(Tok::Ident, "atom after forall");
        expect(Tok::Dot, "'.'");
        return forall(p.text, parseIff());
      }
      case Tok::KwExists: {
        lex_.take();
        auto p = expect(Tok::Ident, "atom after exists");
        expect(Tok::Dot, "'.'");
        return exists(p.text, parseIff());
      }
      case Tok::KwBox: {
        lex_.take();
        auto body = parseUnary();
        auto r = freshAtom(allAtoms(body));
        return forall(r, announce(atom(r), body));
      }
      default:
        return parsePrimary();
    }
  }

  FormulaPtr parsePrimary() {
    switch (lex_.peek().kind) {
      case Tok::Ident:
        return atom(lex_.take().text);
      case Tok::Bot:
        lex_.take();
        return bottom();
      case Tok::Top:
        lex_.take();
        return top();
      case Tok::LPar: {
        lex_.take();
        auto f = parseIff();
        expect(Tok::RPar, "')'");
        return f;
      }
      case Tok::KwTensor: {
        auto t = lex_.take();
        expect(Tok::LBrack, "'[' after tensor");
        long k = expect(Tok::Int, "integer k").value;
        expect(Tok::Comma, "','");
        long n = expect(Tok::Int, "integer n").value;
        expect(Tok::RBrack, "']'");
        expect(Tok::LPar, "'('");
        std::vector<FormulaPtr> args;
        args.push_back(parseIff());
        while (lex_.peek().kind == Tok::Comma) {
          lex_.take();
          args.push_back(parseIff());
        }
        expect(Tok::RPar, "')'");
        try {
          return tensor(static_cast<int>(k), static_cast<int>(n), std::move(args));
        } catch (const StructureError& e) {
          throw ParseError(t.pos, e.what());
        }
      }
      case Tok::Eq: {
        lex_.take();
        expect(Tok::LPar, "'('");
        auto p = expect(Tok::Ident, "atom");
        expect(Tok::Comma, "','");
        auto q = expect(Tok::Ident, "atom");
        expect(Tok::RPar, "')'");
        auto pa = atom(p.text), qa = atom(q.text);
        return implies(disj(pa, neg(pa)), disj(qa, neg(qa)));
      }
      default:
        fail("expected a formula, got '" + lex_.peek().text + "'");
    }
  }

  Lexer lex_;
};

}  // namespace

FormulaPtr parse(const std::string& text) { return Parser(text).parseAll(); }

// --- printer ----------------------------------------------------------------

namespace {

// Precedence levels: 0 binder, 2 ->, 3 | and (+), 4 &, 5 prefix, 6 primary.
int precOf(const FormulaPtr& f, bool sugar) {
  switch (f->kind) {
    case Kind::Atom:
    case Kind::Bottom:
      return 6;
    case Kind::Tensor:
      return f->tensorK == 1 && f->tensorN == 2 ? 3 : 6;
    case Kind::K:
    case Kind::Kh:
    case Kind::Announce:
      return 5;
    case Kind::And:
      return 4;
    case Kind::Or:
      return 3;
    case Kind::Implies:
      if (sugar && f->args[1]->kind == Kind::Bottom && f->args[0]->kind != Kind::Bottom)
        return 5;  // printed as ~
      if (sugar && isTop(f)) return 6;
      return 2;
    case Kind::Forall:
      return 0;
  }
  return 6;
}

void renderRec(const FormulaPtr& f, int minPrec, Kind parentDisjKind, bool sugar,
               std::ostream& os) {
  int p = precOf(f, sugar);
  bool paren = p < minPrec;
  // | and (+) share a level but may not mix without parentheses.
  if (!paren && p == 3 && minPrec == 3 && f->kind != parentDisjKind) paren = true;
  if (paren) os << '(';
  switch (f->kind) {
    case Kind::Atom:
      os << f->name;
      break;
    case Kind::Bottom:
      os << "bot";
      break;
    case Kind::And:
      renderRec(f->args[0], 4, Kind::And, sugar, os);
      os << " & ";
      renderRec(f->args[1], 5, Kind::And, sugar, os);
      break;
    case Kind::Or:
      renderRec(f->args[0], 3, Kind::Or, sugar, os);
      os << " | ";
      renderRec(f->args[1], 4, Kind::Or, sugar, os);
      break;
    case Kind::Implies:
      if (sugar && isTop(f)) {
        os << "top";
        break;
      }
      if (sugar && f->args[1]->kind == Kind::Bottom && f->args[0]->kind != Kind::Bottom) {
        os << '~';
        renderRec(f->args[0], 5, Kind::Implies, sugar, os);
        break;
      }
      renderRec(f->args[0], 3, Kind::Implies, sugar, os);
      os << " -> ";
      renderRec(f->args[1], 2, Kind::Implies, sugar, os);
      break;
    case Kind::Tensor:
      if (f->tensorK == 1 && f->tensorN == 2) {
        renderRec(f->args[0], 3, Kind::Tensor, sugar, os);
        os << " (+) ";
        renderRec(f->args[1], 4, Kind::Tensor, sugar, os);
      } else {
        os << "tensor[" << f->tensorK << ',' << f->tensorN << "](";
        for (std::size_t i = 0; i < f->args.size(); ++i) {
          if (i) os << ',';
          renderRec(f->args[i], 0, Kind::Tensor, sugar, os);
        }
        os << ')';
      }
      break;
    case Kind::K:
      os << "K ";
      renderRec(f->args[0], 5, Kind::K, sugar, os);
      break;
    case Kind::Kh:
      os << "Kh ";
      renderRec(f->args[0], 5, Kind::Kh, sugar, os);
      break;
    case Kind::Forall:
      os << "forall " << f->name << ". ";
      renderRec(f->args[0], 0, Kind::Forall, sugar, os);
      break;
    case Kind::Announce:
      os << '[';
      renderRec(f->args[0], 0, Kind::Announce, sugar, os);
      os << "] ";
      renderRec(f->args[1], 5, Kind::Announce, sugar, os);
      break;
  }
  if (paren) os << ')';
}

}  // namespace

std::string render(const FormulaPtr& f, const RenderOptions& opts) {
  std::ostringstream os;
  renderRec(f, 0, f->kind, opts.sugar, os);
  return os.str();
}

FormulaPtr subterm(const FormulaPtr& f, const std::vector<int>& path) {
  FormulaPtr cur = f;
  for (int i : path) {
    if (i < 0 || i >= static_cast<int>(cur->args.size()))
      throw DomainError("invalid subterm path");
    cur = cur->args[i];
  }
  return cur;
}

FormulaPtr replaceAt(const FormulaPtr& f, const std::vector<int>& path, const FormulaPtr& g) {
  std::function<FormulaPtr(const FormulaPtr&, std::size_t)> go =
      [&](const FormulaPtr& cur, std::size_t d) -> FormulaPtr {
    if (d == path.size()) return g;
    int i = path[d];
    if (i < 0 || i >= static_cast<int>(cur->args.size()))
      throw DomainError("invalid subterm path");
    auto args = cur->args;
    args[i] = go(args[i], d + 1);
    return std::make_shared<const Formula>(cur->kind, cur->name, cur->tensorK, cur->tensorN,
                                           std::move(args));
  };
  return go(f, 0);
}

}  // namespace inqkh
