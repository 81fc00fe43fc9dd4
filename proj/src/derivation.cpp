#include "monoidvar/derivation.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <sstream>
#include <unordered_set>

namespace monoidvar {

std::string to_string(Direction d) {
  return d == Direction::Forward ? "fwd" : "bwd";
}

RewriteStep RewriteStep::reversed() const {
  RewriteStep s = *this;
  s.direction =
      direction == Direction::Forward ? Direction::Backward : Direction::Forward;
  return s;
}

RewriteStep RewriteStep::dual() const {
  RewriteStep s;
  s.identity = dual_identity(identity);
  s.direction = direction;
  s.left = reverse(right);
  s.right = reverse(left);
  for (const auto& [a, w] : xi.images()) s.xi.set(a, reverse(w));
  return s;
}

namespace {

std::string compact(const Word& w) { return w.empty() ? "1" : w.plain(); }

std::string identity_token(const Identity& id) {
  if (!id.name.empty()) return id.name;
  std::string s = compact(id.lhs) + "=" + compact(id.rhs);
  return s;
}

}  // namespace

std::string RewriteStep::str() const {
  return to_string(direction) + " " + identity_token(identity) +
         " a=" + compact(left) + " b=" + compact(right) + " xi=" + xi.str();
}

Word apply_step(const Word& source, const RewriteStep& step) {
  Word expected = step.source();
  if (expected != source)
    throw StepError("step " + step.str() + " expects source " + expected.str() +
                    ", got " + source.str());
  return step.target();
}

Word DerivationTrace::end() const {
  Word w = start;
  for (const auto& s : steps) w = apply_step(w, s);
  return w;
}

std::string DerivationTrace::str() const {
  std::ostringstream os;
  os << "start " << compact(start) << "\n";
  for (const auto& s : steps) os << s.str() << "\n";
  return os.str();
}

DerivationTrace reverse_trace(const DerivationTrace& t) {
  DerivationTrace r;
  r.start = t.end();
  for (auto it = t.steps.rbegin(); it != t.steps.rend(); ++it)
    r.steps.push_back(it->reversed());
  return r;
}

DerivationTrace dual_trace(const DerivationTrace& t) {
  DerivationTrace r;
  r.start = reverse(t.start);
  for (const auto& s : t.steps) r.steps.push_back(s.dual());
  return r;
}

DerivationTrace concat(const DerivationTrace& a, const DerivationTrace& b) {
  if (a.end() != b.start)
    throw StepError("cannot chain traces: " + a.end().str() + " vs " +
                    b.start.str());
  DerivationTrace r = a;
  r.steps.insert(r.steps.end(), b.steps.begin(), b.steps.end());
  return r;
}

DerivationTrace lift_trace(const DerivationTrace& t, const Substitution& xi,
                           const Word& a, const Word& b) {
  DerivationTrace r;
  r.start = a + xi.apply(t.start) + b;
  for (const auto& s : t.steps) {
    RewriteStep n = s;
    n.left = a + xi.apply(s.left);
    n.right = xi.apply(s.right) + b;
    Substitution composed;
    for (const auto& [letter, image] : s.xi.images())
      composed.set(letter, xi.apply(image));
    for (Letter c : (content(s.identity.lhs) | content(s.identity.rhs)).letters())
      if (!s.xi.maps(c)) composed.set(c, xi.apply(Word{c}));
    n.xi = composed;
    r.steps.push_back(std::move(n));
  }
  return r;
}

TraceCheck verify_trace(const DerivationTrace& t, const IdentitySystem& sigma) {
  TraceCheck c;
  const auto rules = sigma.expand();
  Word w = t.start;
  for (std::size_t i = 0; i < t.steps.size(); ++i) {
    const auto& s = t.steps[i];
    Identity flipped(s.identity.rhs, s.identity.lhs);
    bool admitted = std::any_of(rules.begin(), rules.end(), [&](const Identity& r) {
      return r.same_sides(s.identity) || r.same_sides(flipped);
    });
    if (!admitted) {
      c.ok = false;
      c.failing_step = i;
      c.reason = "identity " + s.identity.str() + " is not in the system";
      c.end = w;
      return c;
    }
    try {
      w = apply_step(w, s);
    } catch (const StepError& e) {
      c.ok = false;
      c.failing_step = i;
      c.reason = e.what();
      c.end = w;
      return c;
    }
  }
  c.end = w;
  return c;
}

namespace {

/// Enumerates every way to write w = a xi(pattern) b. Bindings are (offset,
/// length) into w; callback receives start, end and the binding table.
class Matcher {
 public:
  using Binding = std::array<std::pair<int, int>, kMaxLetters>;
  using Callback = std::function<void(std::size_t, std::size_t, const Binding&)>;

  Matcher(const Word& w, const Word& pattern, std::size_t min_len,
          std::size_t max_len)
      : w_(w.raw()), p_(pattern.raw()), min_len_(min_len), max_len_(max_len) {
    bind_.fill({-1, -1});
  }

  void run(const Callback& cb) {
    cb_ = &cb;
    for (std::size_t start = 0; start <= w_.size(); ++start) {
      start_ = start;
      go(0, start);
    }
  }

 private:
  void go(std::size_t pi, std::size_t pos) {
    if (pi == p_.size()) {
      (*cb_)(start_, pos, bind_);
      return;
    }
    auto id = static_cast<unsigned char>(p_[pi]);
    auto& b = bind_[id];
    if (b.first >= 0) {
      auto len = static_cast<std::size_t>(b.second);
      if (pos + len > w_.size()) return;
      if (w_.compare(pos, len, w_, static_cast<std::size_t>(b.first), len) != 0)
        return;
      go(pi + 1, pos + len);
      return;
    }
    std::size_t room = w_.size() - pos;
    for (std::size_t len = min_len_; len <= room && len <= max_len_; ++len) {
      b = {static_cast<int>(pos), static_cast<int>(len)};
      go(pi + 1, pos + len);
    }
    b = {-1, -1};
  }

  const std::string& w_;
  const std::string& p_;
  std::size_t min_len_, max_len_;
  std::size_t start_ = 0;
  Binding bind_;
  const Callback* cb_ = nullptr;
};

void for_each_rewrite(
    const Word& w, const Identity& id, Direction dir, std::size_t len_cap,
    bool allow_empty,
    const std::function<void(Word&&, std::size_t, std::size_t,
                             const Matcher::Binding&)>& emit) {
  const Word& from = dir == Direction::Forward ? id.lhs : id.rhs;
  const Word& to = dir == Direction::Forward ? id.rhs : id.lhs;
  Matcher m(w, from, allow_empty ? 0 : 1, len_cap);
  m.run([&](std::size_t start, std::size_t end, const Matcher::Binding& b) {
    std::size_t len = w.size() - (end - start);
    for (std::size_t i = 0; i < to.size(); ++i) {
      int l = b[to[i].id()].second;
      if (l > 0) len += static_cast<std::size_t>(l);
    }
    if (len > len_cap) return;
    std::string out;
    out.reserve(len);
    out.append(w.raw(), 0, start);
    for (std::size_t i = 0; i < to.size(); ++i) {
      auto [off, l] = b[to[i].id()];
      if (l > 0) out.append(w.raw(), static_cast<std::size_t>(off),
                            static_cast<std::size_t>(l));
    }
    out.append(w.raw(), end, std::string::npos);
    if (out == w.raw()) return;
    emit(Word::from_raw(std::move(out)), start, end, b);
  });
}

RewriteStep make_step(const Word& w, const Identity& id, Direction dir,
                      std::size_t start, std::size_t end,
                      const Matcher::Binding& b) {
  RewriteStep s;
  s.identity = id;
  s.direction = dir;
  s.left = w.prefix(start);
  s.right = w.suffix_from(end);
  for (Letter a : (content(id.lhs) | content(id.rhs)).letters()) {
    auto [off, l] = b[a.id()];
    s.xi.set(a, l > 0 ? w.slice(static_cast<std::size_t>(off),
                                static_cast<std::size_t>(l))
                      : Word{});
  }
  return s;
}

}  // namespace

std::vector<Neighbor> neighbors(const Word& w, const std::vector<Identity>& rules,
                                std::size_t len_cap, bool allow_empty) {
  std::vector<Neighbor> out;
  std::unordered_set<Word> seen;
  for (const auto& id : rules)
    for (Direction dir : {Direction::Forward, Direction::Backward})
      for_each_rewrite(w, id, dir, len_cap, allow_empty,
                       [&](Word&& t, std::size_t s, std::size_t e,
                           const Matcher::Binding& b) {
                         if (!seen.insert(t).second) return;
                         out.push_back({std::move(t), make_step(w, id, dir, s, e, b)});
                       });
  std::stable_sort(out.begin(), out.end(),
                   [](const Neighbor& a, const Neighbor& b) {
                     return a.target < b.target;
                   });
  return out;
}

Deriver::Deriver(IdentitySystem sigma, SearchBudget budget)
    : sigma_(std::move(sigma)), rules_(sigma_.expand()), budget_(budget) {}

const std::vector<Neighbor>& Deriver::neighbors_of(const Word& w,
                                                   std::size_t len_cap) {
  auto& level = cache_[len_cap];
  auto it = level.find(w);
  if (it != level.end()) return it->second;
  auto [ins, _] =
      level.emplace(w, neighbors(w, rules_, len_cap, budget_.allow_empty));
  return ins->second;
}

DeriveResult Deriver::derive(const Word& u, const Word& v) {
  return derive(u, v, budget_);
}

DeriveResult Deriver::derive(const Word& u, const Word& v, const SearchBudget& b) {
  DeriveResult r;
  r.len_cap = b.len_cap ? b.len_cap : std::max(u.size(), v.size()) + 2;
  if (u == v) {
    r.trace = DerivationTrace{u, {}};
    r.outcome = SearchOutcome::Found;
    r.states = 1;
    return r;
  }
  if (u.size() > r.len_cap || v.size() > r.len_cap) return r;
  // parent[w] = (predecessor, index into the predecessor's neighbor list)
  std::unordered_map<Word, std::pair<Word, std::size_t>> parent;
  parent.emplace(u, std::make_pair(Word{}, SIZE_MAX));
  std::vector<Word> frontier{u};
  auto build = [&](const Word& end) {
    std::vector<RewriteStep> steps;
    Word cur = end;
    while (cur != u) {
      const auto& [prev, idx] = parent.at(cur);
      steps.push_back(neighbors_of(prev, r.len_cap)[idx].step);
      cur = prev;
    }
    std::reverse(steps.begin(), steps.end());
    return DerivationTrace{u, std::move(steps)};
  };
  while (!frontier.empty()) {
    std::sort(frontier.begin(), frontier.end());
    std::vector<Word> next;
    for (const Word& w : frontier) {
      const auto& ns = neighbors_of(w, r.len_cap);
      for (std::size_t i = 0; i < ns.size(); ++i) {
        if (parent.contains(ns[i].target)) continue;
        parent.emplace(ns[i].target, std::make_pair(w, i));
        if (ns[i].target == v) {
          r.states = parent.size();
          r.trace = build(v);
          r.outcome = SearchOutcome::Found;
          return r;
        }
        if (parent.size() >= b.max_states) {
          r.states = parent.size();
          r.outcome = SearchOutcome::BudgetHit;
          return r;
        }
        next.push_back(ns[i].target);
      }
    }
    frontier = std::move(next);
  }
  r.states = parent.size();
  r.outcome = SearchOutcome::Exhausted;
  return r;
}

std::vector<Word> Deriver::component(const Word& u, std::size_t len_cap,
                                     std::size_t max_states) {
  std::unordered_set<Word> seen{u};
  std::vector<Word> order{u};
  for (std::size_t i = 0; i < order.size() && seen.size() < max_states; ++i) {
    Word w = order[i];
    for (const auto& n : neighbors_of(w, len_cap))
      if (seen.insert(n.target).second) order.push_back(n.target);
  }
  std::sort(order.begin(), order.end());
  return order;
}

DeriveResult derive(const Word& u, const Word& v, const IdentitySystem& sigma,
                    const SearchBudget& budget) {
  Deriver d(sigma, budget);
  return d.derive(u, v);
}

TraceBuilder& TraceBuilder::step(RewriteStep s) {
  current_ = apply_step(current_, s);
  trace_.steps.push_back(std::move(s));
  return *this;
}

TraceBuilder& TraceBuilder::apply(const Identity& id, Direction dir,
                                  const Substitution& xi,
                                  std::size_t occurrence) {
  RewriteStep s;
  s.identity = id;
  s.direction = dir;
  for (Letter a : (content(id.lhs) | content(id.rhs)).letters())
    s.xi.set(a, xi.image(a));
  Word img = s.xi.apply(s.from_side());
  std::size_t pos = std::string::npos, from = 0;
  for (std::size_t k = 0; k <= occurrence; ++k) {
    pos = current_.raw().find(img.raw(), from);
    if (pos == std::string::npos)
      throw StepError("image " + img.str() + " of " + id.label() +
                      " does not occur in " + current_.str());
    from = pos + 1;
  }
  s.left = current_.prefix(pos);
  s.right = current_.suffix_from(pos + img.size());
  return step(std::move(s));
}

TraceBuilder& TraceBuilder::apply_to(const Identity& id, const Word& target) {
  std::size_t cap = std::max(current_.size(), target.size());
  for (Direction dir : {Direction::Forward, Direction::Backward}) {
    std::optional<RewriteStep> found;
    for_each_rewrite(current_, id, dir, cap, true,
                     [&](Word&& t, std::size_t s, std::size_t e,
                         const Matcher::Binding& b) {
                       if (!found && t == target)
                         found = make_step(current_, id, dir, s, e, b);
                     });
    if (found) return step(std::move(*found));
  }
  throw StepError("no single step of " + id.label() + " rewrites " +
                  current_.str() + " to " + target.str());
}

TraceBuilder& TraceBuilder::append(const DerivationTrace& t) {
  if (t.start != current_)
    throw StepError("appended trace starts at " + t.start.str() + ", expected " +
                    current_.str());
  for (const auto& s : t.steps) step(s);
  return *this;
}

TraceBuilder& TraceBuilder::search_to(const Word& target, Deriver& d,
                                      const SearchBudget& b) {
  auto r = d.derive(current_, target, b);
  if (!r.found())
    throw StepError("no derivation of " + current_.str() + " = " + target.str() +
                    " within budget");
  return append(*r.trace);
}

}  // namespace monoidvar
