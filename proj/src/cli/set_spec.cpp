#include "stabreg/cli/set_spec.hpp"

#include <cctype>

#include "stabreg/serialize.hpp"
#include "stabreg/subgroup.hpp"

namespace stabreg::cli {

std::uint64_t SplitMix64::next() {
  std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

namespace {

class Parser {
 public:
  explicit Parser(const std::string& text) : s_(text) {}

  SetSpec spec() {
    const std::size_t colon = s_.find(':', pos_);
    if (colon == std::string::npos) fail("expected '<kind>:'");
    const std::string kind = s_.substr(pos_, colon - pos_);
    pos_ = colon + 1;
    SetSpec out;
    if (kind == "list") {
      out.kind = SetSpec::Kind::List;
      out.elems = elem_list();
    } else if (kind == "interval") {
      out.kind = SetSpec::Kind::Interval;
      out.lo = integer();
      expect("..");
      out.hi = integer();
      if (out.hi < out.lo) fail("interval upper end below lower end");
    } else if (kind == "subgroup") {
      out.kind = SetSpec::Kind::Subgroup;
      out.elems = elem_list();
    } else if (kind == "coset") {
      out.kind = SetSpec::Kind::Coset;
      out.elems = elem_list();
      expect("+");
      out.shift = element();
    } else if (kind == "union") {
      out.kind = SetSpec::Kind::Union;
      // Splits on every ';' to the end; nested unions flatten left to right.
      out.parts.push_back(spec());
      while (peek(';')) {
        ++pos_;
        out.parts.push_back(spec());
      }
    } else if (kind == "complement") {
      out.kind = SetSpec::Kind::Complement;
      out.parts.push_back(spec());
    } else if (kind == "random") {
      out.kind = SetSpec::Kind::Random;
      expect("p=");
      out.p = number();
      if (!(out.p >= 0 && out.p <= 1)) fail("p must lie in [0,1]");
      if (peek(',')) {
        ++pos_;
        expect("seed=");
        out.seed = static_cast<std::uint64_t>(integer());
        out.has_seed = true;
      }
    } else if (kind == "bitmask") {
      out.kind = SetSpec::Kind::Bitmask;
      const std::size_t start = pos_;
      while (pos_ < s_.size() && std::isxdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (pos_ == start) fail("expected hex digits");
      std::string h = s_.substr(start, pos_ - start);
      for (auto& c : h) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
      const auto nz = h.find_first_not_of('0');
      out.hex = nz == std::string::npos ? "0" : h.substr(nz);
    } else if (kind == "bohr") {
      out.kind = SetSpec::Kind::Bohr;
      expect("K=");
      out.elems = elem_list();
      expect(",rho=");
      out.rho = number();
    } else {
      fail("unknown set kind '" + kind + "'");
    }
    return out;
  }

  void finish() {
    if (pos_ != s_.size()) fail("trailing characters");
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw Error("set spec parse error at position " + std::to_string(pos_) + ": " + msg + " in '" + s_ + "'");
  }

  bool peek(char c) const { return pos_ < s_.size() && s_[pos_] == c; }

  void expect(const std::string& lit) {
    if (s_.compare(pos_, lit.size(), lit) != 0) fail("expected '" + lit + "'");
    pos_ += lit.size();
  }

  long long integer() {
    const std::size_t start = pos_;
    if (peek('-')) ++pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (pos_ == start || (pos_ == start + 1 && s_[start] == '-')) {
      pos_ = start;
      fail("expected integer");
    }
    return std::stoll(s_.substr(start, pos_ - start));
  }

  double number() {
    const std::size_t start = pos_;
    while (pos_ < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '.' ||
                                s_[pos_] == 'e' || s_[pos_] == 'E' || s_[pos_] == '-'))
      ++pos_;
    try {
      std::size_t used = 0;
      const double v = std::stod(s_.substr(start, pos_ - start), &used);
      if (used != pos_ - start) throw Error("");
      return v;
    } catch (...) {
      pos_ = start;
      fail("expected number");
    }
  }

  Coords element() {
    Coords c;
    if (peek('(')) {
      ++pos_;
      c.push_back(integer());
      while (peek(',')) {
        ++pos_;
        c.push_back(integer());
      }
      expect(")");
    } else {
      c.push_back(integer());
    }
    return c;
  }

  std::vector<Coords> elem_list() {
    expect("[");
    std::vector<Coords> out;
    if (peek(']')) {
      ++pos_;
      return out;
    }
    out.push_back(element());
    while (peek(',')) {
      ++pos_;
      out.push_back(element());
    }
    expect("]");
    return out;
  }

  const std::string& s_;
  std::size_t pos_ = 0;
};

std::string print_elem(const Coords& c) {
  if (c.size() == 1) return std::to_string(c[0]);
  std::string s = "(";
  for (std::size_t i = 0; i < c.size(); ++i) s += (i ? "," : "") + std::to_string(c[i]);
  return s + ")";
}

std::string print_list(const std::vector<Coords>& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + print_elem(v[i]);
  return s + "]";
}

Rank to_rank(const Group& g, const Coords& c) {
  if (static_cast<int>(c.size()) != g.factors())
    throw Error("element " + print_elem(c) + " has wrong arity for " + g.to_string());
  Element e;
  for (int i = 0; i < g.factors(); ++i) {
    const long long n = g.moduli()[static_cast<std::size_t>(i)];
    e.coords.push_back(static_cast<int>(((c[static_cast<std::size_t>(i)] % n) + n) % n));
  }
  return g.rank(e);
}

std::vector<Rank> to_ranks(const Group& g, const std::vector<Coords>& v) {
  std::vector<Rank> out;
  for (const auto& c : v) out.push_back(to_rank(g, c));
  return out;
}

int hex_value(char c) { return std::isdigit(static_cast<unsigned char>(c)) ? c - '0' : c - 'a' + 10; }

}  // namespace

SetSpec parse_set_spec(const std::string& text) {
  Parser p(text);
  SetSpec s = p.spec();
  p.finish();
  return s;
}

std::string print(const SetSpec& s) {
  switch (s.kind) {
    case SetSpec::Kind::List: return "list:" + print_list(s.elems);
    case SetSpec::Kind::Interval: return "interval:" + std::to_string(s.lo) + ".." + std::to_string(s.hi);
    case SetSpec::Kind::Subgroup: return "subgroup:" + print_list(s.elems);
    case SetSpec::Kind::Coset: return "coset:" + print_list(s.elems) + "+" + print_elem(s.shift);
    case SetSpec::Kind::Union: {
      std::string out = "union:";
      for (std::size_t i = 0; i < s.parts.size(); ++i) out += (i ? ";" : "") + print(s.parts[i]);
      return out;
    }
    case SetSpec::Kind::Complement: return "complement:" + print(s.parts.at(0));
    case SetSpec::Kind::Random:
      return "random:p=" + fmt_double(s.p) + (s.has_seed ? ",seed=" + std::to_string(s.seed) : "");
    case SetSpec::Kind::Bitmask: return "bitmask:" + s.hex;
    case SetSpec::Kind::Bohr: return "bohr:K=" + print_list(s.elems) + ",rho=" + fmt_double(s.rho);
  }
  return "";
}

BohrSet resolve_bohr(const SetSpec& s, const Group& g) {
  if (s.kind != SetSpec::Kind::Bohr) throw Error("not a bohr: spec");
  return BohrSet(g, to_ranks(g, s.elems), s.rho);
}

GSet resolve(const SetSpec& s, const Group& g, std::uint64_t default_seed) {
  switch (s.kind) {
    case SetSpec::Kind::List: {
      const auto r = to_ranks(g, s.elems);
      return GSet::from_ranks(g, r);
    }
    case SetSpec::Kind::Interval: {
      if (!g.is_cyclic()) throw Error("interval sets need a cyclic group");
      GSet out(g);
      for (long long v = s.lo; v <= s.hi; ++v) out.insert(to_rank(g, {v}));
      return out;
    }
    case SetSpec::Kind::Subgroup: return span(g, to_ranks(g, s.elems)).members();
    case SetSpec::Kind::Coset: return span(g, to_ranks(g, s.elems)).members().translate(to_rank(g, s.shift));
    case SetSpec::Kind::Union: {
      GSet out(g);
      for (const auto& p : s.parts) out |= resolve(p, g, default_seed);
      return out;
    }
    case SetSpec::Kind::Complement: return resolve(s.parts.at(0), g, default_seed).complement();
    case SetSpec::Kind::Random: {
      SplitMix64 rng(s.has_seed ? s.seed : default_seed);
      GSet out(g);
      for (std::size_t r = 0; r < g.order(); ++r)
        if (rng.uniform() < s.p) out.insert(static_cast<Rank>(r));
      return out;
    }
    case SetSpec::Kind::Bitmask: {
      GSet out(g);
      const std::size_t nd = s.hex.size();
      for (std::size_t i = 0; i < nd; ++i) {
        const int v = hex_value(s.hex[nd - 1 - i]);
        for (int b = 0; b < 4; ++b) {
          if (!(v >> b & 1)) continue;
          const std::size_t r = 4 * i + static_cast<std::size_t>(b);
          if (r >= g.order()) throw Error("bitmask has bits beyond the group order");
          out.insert(static_cast<Rank>(r));
        }
      }
      return out;
    }
    case SetSpec::Kind::Bohr: return resolve_bohr(s, g).members();
  }
  throw Error("unhandled set kind");
}

GSet parse_set(const std::string& text, const Group& g, std::uint64_t default_seed) {
  return resolve(parse_set_spec(text), g, default_seed);
}

}  // namespace stabreg::cli
