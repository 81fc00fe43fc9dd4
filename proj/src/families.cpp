#include "monoidvar/families.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <sstream>

namespace monoidvar {

namespace {

const Letter X = named('x');
const Letter Y = named('y');
const Letter Z = named('z');

Word tail(std::size_t from, std::size_t to, std::size_t exp) {
  Word w;
  for (std::size_t i = from; i <= to; ++i) {
    w.push_back(band(i));
    w.append(e_letter(i), exp);
  }
  return w;
}

Word xw(std::initializer_list<Letter> ls) { return Word(ls); }

unsigned factorial(unsigned n) {
  unsigned f = 1;
  for (unsigned i = 2; i <= n; ++i) f *= i;
  return f;
}

std::vector<unsigned> nth_permutation(unsigned n, unsigned rank) {
  std::vector<unsigned> p(n);
  std::iota(p.begin(), p.end(), 1u);
  for (unsigned r = 0; r < rank; ++r) std::next_permutation(p.begin(), p.end());
  return p;
}

std::string param_name(std::string_view name, unsigned p, unsigned q,
                       unsigned arity) {
  std::string s(name);
  s += "_" + std::to_string(p);
  if (arity == 2) {
    if (name == "jperm") {
      s += "_";
      for (unsigned v : nth_permutation(p, q)) s += std::to_string(v);
    } else {
      s += "_" + std::to_string(q);
    }
  }
  return s;
}

}  // namespace

Letter e_letter(std::size_t i) { return i % 2 == 1 ? X : Y; }

const std::vector<FamilyInfo>& family_catalog() {
  static const std::vector<FamilyInfo> k{
      {"alpha", 1, 1},   {"beta", 1, 1},     {"gamma", 1, 1},
      {"gammap", 1, 1},  {"delta", 2, 1},    {"kappa", 2, 1},
      {"power", 1, 1},   {"powcomm", 1, 1},  {"xyxn", 1, 1},
      {"insert", 1, 1},  {"collapse", 1, 1}, {"delete", 1, 1},
      {"jperm", 2, 1},
  };
  return k;
}

const FamilyInfo* find_family(std::string_view name) {
  for (const auto& f : family_catalog())
    if (f.name == name) return &f;
  return nullptr;
}

std::pair<unsigned, unsigned> second_param_range(std::string_view name,
                                                 unsigned first,
                                                 unsigned declared_hi) {
  if (name == "kappa") return {0, first};
  if (name == "jperm") return {0, factorial(first) - 1};
  return {1, declared_hi};
}

Identity family(std::string_view name, unsigned p, unsigned q) {
  const FamilyInfo* info = find_family(name);
  if (!info) throw PreconditionError("unknown family " + std::string(name));
  if (p < info->min_first)
    throw PreconditionError(std::string(name) + ": parameter " +
                            std::to_string(p) + " out of range");
  if (name == "kappa" && q > p)
    throw PreconditionError("kappa: need 0 <= j <= n");
  if (name == "delta" && q < 1) throw PreconditionError("delta: need n >= 1");
  if (name == "jperm" && (p > 8 || q >= factorial(p)))
    throw PreconditionError("jperm: permutation rank out of range");

  Word l, r;
  if (name == "alpha") {
    l = xw({X, Y}) + tail(1, p + 1, 1);
    r = xw({Y, X}) + tail(1, p + 1, 1);
  } else if (name == "beta") {
    l = xw({Y, X, X}) + tail(2, p + 1, 1);
    r = xw({X, Y, X}) + tail(2, p + 1, 1);
  } else if (name == "gamma") {
    l = xw({X, X, Y}) + tail(1, p + 1, 1);
    r = xw({X, Y, X}) + tail(1, p + 1, 1);
  } else if (name == "gammap") {
    l = xw({X, X, Y}) + tail(2, p + 1, 1);
    r = xw({X, Y, X}) + tail(2, p + 1, 1);
  } else if (name == "delta") {
    l = xw({X, Y}) + tail(1, p + 1, q);
    r = xw({Y, X}) + tail(1, p + 1, q);
  } else if (name == "kappa") {
    for (unsigned i = 0; i <= p; ++i) {
      l.push_back(band(i));
      l.push_back(X);
      r.push_back(band(i));
      r.append(X, i == q ? 2 : 1);
    }
  } else if (name == "power") {
    l = power(X, p);
    r = power(X, p + 1);
  } else if (name == "powcomm") {
    l = power(X, p) + power(Y, p);
    r = power(Y, p) + power(X, p);
  } else if (name == "xyxn") {
    l = xw({X, Y}) + power(X, p);
    r = power(X, p) + xw({Y}) + power(X, p);
  } else if (name == "insert") {
    l = power(X, p) + xw({Y, Z}) + power(X, p);
    r = power(X, p) + xw({Y, X, Z}) + power(X, p);
  } else if (name == "collapse") {
    l = power(X, p) + xw({Y}) + power(X, p) + xw({Z}) + power(X, p);
    r = power(X, p) + xw({Y, Z}) + power(X, p);
  } else if (name == "delete") {
    Word left{X}, right{X};
    for (unsigned i = 1; i <= p; ++i) {
      left.push_back(band(i));
      left.push_back(X);
      right.push_back(band(p + i));
      right.push_back(X);
    }
    l = left + xw({Y, Z}) + right;
    r = left + xw({Y, X, Z}) + right;
  } else if (name == "jperm") {
    Word perm, suffix;
    for (unsigned v : nth_permutation(p, q))
      perm.push_back(named(static_cast<char>('a' + v - 1)));
    for (unsigned i = 1; i <= p; ++i) {
      suffix.push_back(band(i));
      suffix.push_back(named(static_cast<char>('a' + i - 1)));
    }
    l = xw({X}) + perm + xw({X}) + suffix;
    r = xw({X, X}) + perm + suffix;
  }
  return Identity(std::move(l), std::move(r),
                  param_name(name, p, q, info->arity));
}

std::string FamilyRange::str() const {
  std::string s = (dual ? "dual-" : "") + name + "[" + std::to_string(lo) +
                  ".." + std::to_string(hi);
  if (second)
    s += ";" + std::to_string(second->first) + ".." +
         std::to_string(second->second);
  return s + "]";
}

FamilyRange FamilyRange::parse(std::string_view text) {
  FamilyRange r;
  std::string t(text);
  t.erase(std::remove_if(t.begin(), t.end(),
                         [](unsigned char c) { return std::isspace(c); }),
          t.end());
  if (t.rfind("dual-", 0) == 0) {
    r.dual = true;
    t = t.substr(5);
  }
  auto open = t.find('[');
  auto close = t.find(']');
  if (open == std::string::npos || close == std::string::npos || close < open)
    throw ParseError("family range must look like name[lo..hi]", 0);
  r.name = t.substr(0, open);
  if (!find_family(r.name)) throw ParseError("unknown family " + r.name, 0);
  auto parse_range = [&](const std::string& s) {
    auto dots = s.find("..");
    if (dots == std::string::npos) {
      unsigned v = static_cast<unsigned>(std::stoul(s));
      return std::make_pair(v, v);
    }
    return std::make_pair(static_cast<unsigned>(std::stoul(s.substr(0, dots))),
                          static_cast<unsigned>(std::stoul(s.substr(dots + 2))));
  };
  std::string inner = t.substr(open + 1, close - open - 1);
  auto semi = inner.find(';');
  try {
    auto first = parse_range(inner.substr(0, semi));
    r.lo = first.first;
    r.hi = first.second;
    if (semi != std::string::npos) r.second = parse_range(inner.substr(semi + 1));
  } catch (const std::logic_error&) {
    throw ParseError("malformed family range " + std::string(text), open + 1);
  }
  if (r.lo > r.hi || (r.second && r.second->first > r.second->second))
    throw ParseError("empty family range " + std::string(text), open + 1);
  return r;
}

std::vector<Identity> family_instances(const FamilyRange& r) {
  const FamilyInfo* info = find_family(r.name);
  if (!info) throw PreconditionError("unknown family " + r.name);
  std::vector<Identity> out;
  for (unsigned p = std::max(r.lo, info->min_first); p <= r.hi; ++p) {
    if (info->arity == 1) {
      out.push_back(family(r.name, p));
      continue;
    }
    auto legal = second_param_range(r.name, p, r.second ? r.second->second : p);
    unsigned qlo = legal.first, qhi = legal.second;
    if (r.second) {
      qlo = std::max(qlo, r.second->first);
      qhi = std::min(qhi, r.second->second);
    }
    for (unsigned q = qlo; q <= qhi; ++q) out.push_back(family(r.name, p, q));
  }
  if (r.dual)
    for (auto& id : out) id = dual_identity(id);
  return out;
}

std::vector<Identity> IdentitySystem::expand() const {
  std::vector<Identity> out = fixed;
  for (const auto& f : families) {
    auto inst = family_instances(f);
    out.insert(out.end(), inst.begin(), inst.end());
  }
  return out;
}

bool IdentitySystem::admits(const Identity& id) const {
  Identity flipped(id.rhs, id.lhs);
  for (const auto& s : expand())
    if (s.same_sides(id) || s.same_sides(flipped)) return true;
  return false;
}

IdentitySystem IdentitySystem::dual() const {
  IdentitySystem d;
  for (const auto& id : fixed) d.fixed.push_back(dual_identity(id));
  for (auto f : families) {
    f.dual = !f.dual;
    d.families.push_back(f);
  }
  return d;
}

std::string IdentitySystem::str() const {
  std::string s;
  for (const auto& id : fixed) s += (s.empty() ? "" : "; ") + id.label();
  for (const auto& f : families) s += (s.empty() ? "" : "; ") + f.str();
  return s;
}

IdentitySystem dual_system(const IdentitySystem& s) { return s.dual(); }

IdentitySystem parse_system(std::string_view text) {
  IdentitySystem sys;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    line = line.substr(first);
    if (line.rfind("family", 0) == 0 && line.find('=') == std::string::npos) {
      sys.families.push_back(FamilyRange::parse(line.substr(6)));
      continue;
    }
    std::string name;
    auto colon = line.find(':');
    if (colon != std::string::npos && colon < line.find('=')) {
      name = line.substr(0, colon);
      name.erase(name.find_last_not_of(" \t") + 1);
      line = line.substr(colon + 1);
    }
    try {
      sys.fixed.push_back(Identity::parse(line, name));
    } catch (const ParseError& e) {
      throw ParseError("line " + std::to_string(lineno) + ": " + e.what(),
                       e.position());
    }
  }
  return sys;
}

IdentitySystem read_system_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open system file " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_system(ss.str());
}

}  // namespace monoidvar
