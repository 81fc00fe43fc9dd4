#include "monoidvar/finite_monoid.hpp"

#include <array>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace monoidvar {

FiniteMonoid::FiniteMonoid(std::size_t size, std::vector<Elem> table,
                           Elem identity, std::vector<std::string> labels)
    : size_(size),
      table_(std::move(table)),
      identity_(identity),
      labels_(std::move(labels)) {
  if (size_ == 0) throw PreconditionError("monoid must be non-empty");
  if (table_.size() != size_ * size_)
    throw PreconditionError("table has " + std::to_string(table_.size()) +
                            " entries, expected " +
                            std::to_string(size_ * size_));
  if (identity_ >= size_) throw PreconditionError("identity index out of range");
  for (Elem e : table_)
    if (e >= size_) throw PreconditionError("table entry out of range");
  labels_.resize(size_);
  for (std::size_t i = 0; i < size_; ++i)
    if (labels_[i].empty()) labels_[i] = std::to_string(i);
  for (Elem z = 0; z < size_; ++z) {
    bool is_zero = true;
    for (Elem a = 0; a < size_ && is_zero; ++a)
      is_zero = mul(z, a) == z && mul(a, z) == z;
    if (is_zero) {
      zero_ = z;
      break;
    }
  }
}

Validation validate(const FiniteMonoid& m) {
  const auto n = static_cast<Elem>(m.size());
  for (Elem a = 0; a < n; ++a) {
    if (m.mul(m.identity(), a) != a || m.mul(a, m.identity()) != a)
      return {false, "element " + m.label(m.identity()) +
                         " is not a two-sided identity (fails on " +
                         m.label(a) + ")",
              {m.identity(), a}};
  }
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) {
      Elem ab = m.mul(a, b);
      for (Elem c = 0; c < n; ++c)
        if (m.mul(ab, c) != m.mul(a, m.mul(b, c)))
          return {false,
                  "not associative at (" + m.label(a) + "," + m.label(b) +
                      "," + m.label(c) + ")",
                  {a, b, c}};
    }
  return {};
}

Elem evaluate(const FiniteMonoid& m, const Word& w, const Assignment& a) {
  Elem acc = m.identity();
  for (std::size_t i = 0; i < w.size(); ++i) {
    auto it = a.find(w[i]);
    if (it == a.end())
      throw PreconditionError(std::string("unassigned letter ") +
                              w[i].display());
    acc = m.mul(acc, it->second);
  }
  return acc;
}

namespace {

constexpr int kUnassigned = -1;

class SatSearch {
 public:
  SatSearch(const FiniteMonoid& m, const Identity& id) : m_(m), id_(id) {
    LetterSet seen;
    auto scan = [&](const Word& w) {
      for (std::size_t i = 0; i < w.size(); ++i)
        if (!seen.contains(w[i])) {
          seen.insert(w[i]);
          order_.push_back(w[i]);
        }
    };
    scan(id.lhs);
    scan(id.rhs);
    value_.fill(kUnassigned);
  }

  std::size_t alphabet() const { return order_.size(); }

  SatResult run() {
    SatResult r;
    if (dfs(0, r)) r.status = SatStatus::Holds;
    return r;
  }

 private:
  Elem eval(const Word& w) const {
    Elem acc = m_.identity();
    for (std::size_t i = 0; i < w.size(); ++i)
      acc = m_.mul(acc, static_cast<Elem>(value_[w[i].id()]));
    return acc;
  }

  // True when some maximal run of assigned letters in w multiplies to zero.
  bool has_zero_run(const Word& w, Elem zero) const {
    Elem acc = m_.identity();
    for (std::size_t i = 0; i < w.size(); ++i) {
      int v = value_[w[i].id()];
      if (v == kUnassigned) {
        acc = m_.identity();
        continue;
      }
      acc = m_.mul(acc, static_cast<Elem>(v));
      if (acc == zero) return true;
    }
    return false;
  }

  bool dfs(std::size_t depth, SatResult& r) {
    if (depth == order_.size()) {
      ++r.leaves;
      if (eval(id_.lhs) != eval(id_.rhs)) {
        r.status = SatStatus::Fails;
        Assignment a;
        for (Letter x : order_) a[x] = static_cast<Elem>(value_[x.id()]);
        r.counterexample = std::move(a);
        return false;
      }
      return true;
    }
    const auto zero = m_.zero();
    for (Elem e = 0; e < m_.size(); ++e) {
      value_[order_[depth].id()] = static_cast<int>(e);
      if (zero && depth + 1 < order_.size() && has_zero_run(id_.lhs, *zero) &&
          has_zero_run(id_.rhs, *zero))
        continue;
      if (!dfs(depth + 1, r)) return false;
    }
    value_[order_[depth].id()] = kUnassigned;
    return true;
  }

  const FiniteMonoid& m_;
  const Identity& id_;
  std::vector<Letter> order_;
  std::array<int, kMaxLetters> value_{};
};

}  // namespace

SatResult satisfies(const FiniteMonoid& m, const Identity& id, double cap) {
  if (id.trivial()) return {};
  SatSearch search(m, id);
  double space = std::pow(static_cast<double>(m.size()),
                          static_cast<double>(search.alphabet()));
  if (space > cap) {
    SatResult r;
    r.status = SatStatus::BudgetExceeded;
    return r;
  }
  return search.run();
}

std::vector<Elem> idempotents(const FiniteMonoid& m) {
  std::vector<Elem> out;
  for (Elem a = 0; a < m.size(); ++a)
    if (m.mul(a, a) == a) out.push_back(a);
  return out;
}

bool is_aperiodic(const FiniteMonoid& m) {
  // a^n = a^(n+1) for some n <= size, for every a
  for (Elem a = 0; a < m.size(); ++a) {
    Elem p = a;
    bool stable = false;
    for (std::size_t n = 1; n <= m.size(); ++n) {
      Elem next = m.mul(p, a);
      if (next == p) {
        stable = true;
        break;
      }
      p = next;
    }
    if (!stable) return false;
  }
  return true;
}

bool idempotents_commute(const FiniteMonoid& m) {
  auto ids = idempotents(m);
  for (Elem e : ids)
    for (Elem f : ids)
      if (m.mul(e, f) != m.mul(f, e)) return false;
  return true;
}

FiniteMonoid dual_monoid(const FiniteMonoid& m) {
  const std::size_t n = m.size();
  std::vector<Elem> t(n * n);
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) t[a * n + b] = m.mul(b, a);
  return FiniteMonoid(n, std::move(t), m.identity(), m.labels());
}

FiniteMonoid direct_product(const FiniteMonoid& a, const FiniteMonoid& b,
                            std::size_t cap) {
  const std::size_t na = a.size(), nb = b.size(), n = na * nb;
  if (n > cap)
    throw PreconditionError("product size " + std::to_string(n) +
                            " exceeds cap " + std::to_string(cap));
  std::vector<Elem> t(n * n);
  std::vector<std::string> labels(n);
  for (Elem i = 0; i < na; ++i)
    for (Elem j = 0; j < nb; ++j) {
      Elem p = i * static_cast<Elem>(nb) + j;
      labels[p] = "(" + a.label(i) + "," + b.label(j) + ")";
      for (Elem k = 0; k < na; ++k)
        for (Elem l = 0; l < nb; ++l) {
          Elem q = k * static_cast<Elem>(nb) + l;
          t[p * n + q] = a.mul(i, k) * static_cast<Elem>(nb) + b.mul(j, l);
        }
    }
  return FiniteMonoid(n, std::move(t),
                      a.identity() * static_cast<Elem>(nb) + b.identity(),
                      std::move(labels));
}

FiniteMonoid trivial_monoid() { return FiniteMonoid(1, {0}, 0, {"1"}); }

FiniteMonoid semilattice2() {
  return FiniteMonoid(2, {0, 1, 1, 1}, 0, {"1", "e"});
}

FiniteMonoid monogenic(std::size_t index, std::size_t period) {
  if (index == 0 || period == 0)
    throw PreconditionError("index and period must be positive");
  // elements: 0 = 1, k = a^k for k = 1 .. index+period-1
  const std::size_t n = index + period;
  auto reduce = [&](std::size_t k) {
    if (k < index + period) return k;
    return index + (k - index) % period;
  };
  std::vector<Elem> t(n * n);
  std::vector<std::string> labels(n);
  for (std::size_t i = 0; i < n; ++i) {
    labels[i] = i == 0 ? "1" : (i == 1 ? "a" : "a^" + std::to_string(i));
    for (std::size_t j = 0; j < n; ++j)
      t[i * n + j] = static_cast<Elem>(i == 0 ? j : (j == 0 ? i : reduce(i + j)));
  }
  return FiniteMonoid(n, std::move(t), 0, std::move(labels));
}

FiniteMonoid left_zero_band_with_identity() {
  // 0 = 1, 1 = e, 2 = f; ef = e, fe = f
  return FiniteMonoid(3, {0, 1, 2, 1, 1, 1, 2, 2, 2}, 0, {"1", "e", "f"});
}

FiniteMonoid read_table(std::istream& in) {
  std::string line;
  std::size_t size = 0;
  Elem identity = 0;
  bool header = false;
  std::vector<Elem> table;
  std::map<std::size_t, std::string> labels;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string tok;
    if (!(ls >> tok)) continue;
    if (tok[0] == '#') {
      std::string kw;
      if (tok == "#" && (ls >> kw) && kw == "label") {
        std::size_t i;
        std::string name;
        if (!(ls >> i >> name)) throw ParseError("malformed label line", lineno);
        labels[i] = name;
      }
      continue;
    }
    if (!header) {
      if (tok != "n" || !(ls >> size >> identity))
        throw ParseError("expected header `n <size> <identity>`", lineno);
      header = true;
      continue;
    }
    std::istringstream row(line);
    Elem e;
    std::size_t count = 0;
    while (row >> e) {
      table.push_back(e);
      ++count;
    }
    if (count != size)
      throw ParseError("row has " + std::to_string(count) + " entries", lineno);
  }
  if (!header) throw ParseError("missing header", 0);
  std::vector<std::string> names(size);
  for (const auto& [i, name] : labels)
    if (i < size) names[i] = name;
  return FiniteMonoid(size, std::move(table), identity, std::move(names));
}

FiniteMonoid read_table_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open table file " + path);
  return read_table(in);
}

void write_table(std::ostream& out, const FiniteMonoid& m) {
  out << "n " << m.size() << " " << m.identity() << "\n";
  for (Elem a = 0; a < m.size(); ++a) {
    for (Elem b = 0; b < m.size(); ++b) out << (b ? " " : "") << m.mul(a, b);
    out << "\n";
  }
  for (Elem a = 0; a < m.size(); ++a)
    out << "# label " << a << " " << m.label(a) << "\n";
}

std::string format_assignment(const FiniteMonoid& m, const Assignment& a) {
  std::string s = "{";
  bool first = true;
  for (const auto& [x, e] : a) {
    if (!first) s += ", ";
    s += x.display();
    s += "->";
    s += m.label(e);
    first = false;
  }
  return s + "}";
}

}  // namespace monoidvar
