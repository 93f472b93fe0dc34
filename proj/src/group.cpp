#include "caykit/group.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <sstream>

namespace caykit {

namespace {

constexpr const char* kLetters = "abcdefghijklmnopqrstuvwxyz";

bool family_is_finite(const GroupSpec& s) {
  switch (s.family) {
    case Family::FiniteCyclic:
    case Family::FiniteSymmetric:
      return true;
    case Family::FreeAbelian:
    case Family::Free:
    case Family::FreeProductZZ3:
      return false;
    case Family::DirectProduct:
      for (const auto& f : s.factors)
        if (!family_is_finite(f)) return false;
      return true;
  }
  return false;
}

void fill_declared(GroupSpec& s) {
  switch (s.family) {
    case Family::FiniteCyclic:
    case Family::FiniteSymmetric:
      s.declared_ends = 0;
      s.declared_amenable = true;
      break;
    case Family::FreeAbelian:
      s.declared_ends = (s.param == 1) ? 2 : 1;
      s.declared_amenable = true;
      break;
    case Family::Free:
      s.declared_ends = (s.param == 1) ? 2 : -1;
      s.declared_amenable = (s.param == 1);
      break;
    case Family::FreeProductZZ3:
      s.declared_ends = -1;
      s.declared_amenable = false;
      break;
    case Family::DirectProduct: {
      int infinite = 0;
      int single_inf_ends = 0;
      bool amen = true;
      for (auto& f : s.factors) {
        fill_declared(f);
        amen = amen && f.declared_amenable;
        if (!family_is_finite(f)) {
          ++infinite;
          single_inf_ends = f.declared_ends;
        }
      }
      s.declared_amenable = amen;
      if (infinite == 0)
        s.declared_ends = 0;
      else if (infinite == 1)
        s.declared_ends = single_inf_ends;
      else
        s.declared_ends = 1;  // product of two infinite groups is one-ended
      break;
    }
  }
}

// Syllable words are stored flat as [gen, exp, gen, exp, ...].
struct Syllable {
  long long gen;
  long long exp;
};

std::vector<Syllable> to_syllables(const Element& e) {
  std::vector<Syllable> out;
  out.reserve(e.data.size() / 2);
  for (size_t i = 0; i + 1 < e.data.size(); i += 2)
    out.push_back({e.data[i], e.data[i + 1]});
  return out;
}

Element from_syllables(const std::vector<Syllable>& w) {
  Element e;
  e.data.reserve(w.size() * 2);
  for (const auto& s : w) {
    e.data.push_back(s.gen);
    e.data.push_back(s.exp);
  }
  return e;
}

// Appends one syllable to a reduced word, merging with the tail. u-syllables
// (gen == u_gen) live in Z_3; everything else is a Z exponent.
void push_reduced(std::vector<Syllable>& w, Syllable s, long long u_gen) {
  if (s.exp == 0) return;
  if (s.gen == u_gen) {
    s.exp = ((s.exp % 3) + 3) % 3;
    if (s.exp == 0) return;
  }
  if (!w.empty() && w.back().gen == s.gen) {
    long long merged = w.back().exp + s.exp;
    if (s.gen == u_gen) merged = ((merged % 3) + 3) % 3;
    w.pop_back();
    if (merged != 0) push_reduced(w, {s.gen, merged}, u_gen);
    return;
  }
  w.push_back(s);
}

std::vector<Syllable> multiply_words(const std::vector<Syllable>& a,
                                     const std::vector<Syllable>& b,
                                     long long u_gen) {
  std::vector<Syllable> out = a;
  for (const auto& s : b) push_reduced(out, s, u_gen);
  return out;
}

// Layout of a direct-product element: [len_0, d_0..., len_1, d_1...].
std::vector<Element> split_product(const Element& e, size_t nfactors) {
  std::vector<Element> parts;
  parts.reserve(nfactors);
  size_t pos = 0;
  for (size_t f = 0; f < nfactors; ++f) {
    if (pos >= e.data.size()) throw Error("malformed product element");
    long long len = e.data[pos++];
    if (len < 0 || pos + static_cast<size_t>(len) > e.data.size())
      throw Error("malformed product element");
    Element part;
    part.data.assign(e.data.begin() + pos, e.data.begin() + pos + len);
    pos += static_cast<size_t>(len);
    parts.push_back(std::move(part));
  }
  if (pos != e.data.size()) throw Error("malformed product element");
  return parts;
}

Element join_product(const std::vector<Element>& parts) {
  Element e;
  for (const auto& p : parts) {
    e.data.push_back(static_cast<long long>(p.data.size()));
    e.data.insert(e.data.end(), p.data.begin(), p.data.end());
  }
  return e;
}

}  // namespace

GroupSpec GroupSpec::free_abelian(int dim) {
  GroupSpec s;
  s.family = Family::FreeAbelian;
  s.param = dim;
  fill_declared(s);
  return s;
}

GroupSpec GroupSpec::free(int rank) {
  GroupSpec s;
  s.family = Family::Free;
  s.param = rank;
  fill_declared(s);
  return s;
}

GroupSpec GroupSpec::finite_cyclic(int order) {
  GroupSpec s;
  s.family = Family::FiniteCyclic;
  s.param = order;
  fill_declared(s);
  return s;
}

GroupSpec GroupSpec::finite_symmetric(int degree) {
  GroupSpec s;
  s.family = Family::FiniteSymmetric;
  s.param = degree;
  fill_declared(s);
  return s;
}

GroupSpec GroupSpec::free_product_z_z3() {
  GroupSpec s;
  s.family = Family::FreeProductZZ3;
  s.param = 0;
  fill_declared(s);
  return s;
}

GroupSpec GroupSpec::direct_product(std::vector<GroupSpec> factors) {
  GroupSpec s;
  s.family = Family::DirectProduct;
  s.param = static_cast<int>(factors.size());
  s.factors = std::move(factors);
  fill_declared(s);
  return s;
}

Group::Group(GroupSpec spec) : spec_(std::move(spec)) {
  std::ostringstream nm;
  switch (spec_.family) {
    case Family::FreeAbelian: {
      if (spec_.param < 1 || spec_.param > 26)
        throw Error("free abelian rank must be in [1,26]");
      for (int i = 0; i < spec_.param; ++i)
        gen_names_.emplace_back(1, kLetters[i]);
      nm << "Z^" << spec_.param;
      break;
    }
    case Family::Free: {
      if (spec_.param < 1 || spec_.param > 26)
        throw Error("free rank must be in [1,26]");
      for (int i = 0; i < spec_.param; ++i)
        gen_names_.emplace_back(1, kLetters[i]);
      nm << "F_" << spec_.param;
      break;
    }
    case Family::FiniteCyclic: {
      if (spec_.param < 1) throw Error("cyclic order must be positive");
      if (spec_.param > 1) gen_names_.emplace_back("a");
      nm << "Z_" << spec_.param;
      break;
    }
    case Family::FiniteSymmetric: {
      if (spec_.param < 1) throw Error("symmetric degree must be positive");
      if (spec_.param >= 2) gen_names_.emplace_back("s");
      if (spec_.param >= 3) gen_names_.emplace_back("c");
      nm << "S_" << spec_.param;
      break;
    }
    case Family::FreeProductZZ3: {
      gen_names_ = {"t", "u"};
      nm << "Z*Z_3";
      break;
    }
    case Family::DirectProduct: {
      if (spec_.factors.empty()) throw Error("empty direct product");
      int total = 0;
      nm << "(";
      for (size_t i = 0; i < spec_.factors.size(); ++i) {
        factors_.push_back(std::make_unique<Group>(spec_.factors[i]));
        total += factors_.back()->generator_count();
        nm << (i ? " x " : "") << factors_.back()->name();
      }
      nm << ")";
      if (total > 26) throw Error("too many product generators");
      for (int i = 0; i < total; ++i) gen_names_.emplace_back(1, kLetters[i]);
      break;
    }
  }
  name_ = nm.str();
}

Element Group::identity() const {
  switch (spec_.family) {
    case Family::FreeAbelian:
      return Element{std::vector<long long>(spec_.param, 0)};
    case Family::FiniteCyclic:
      return Element{{0}};
    case Family::FiniteSymmetric: {
      Element e;
      e.data.resize(spec_.param);
      std::iota(e.data.begin(), e.data.end(), 0);
      return e;
    }
    case Family::Free:
    case Family::FreeProductZZ3:
      return Element{};
    case Family::DirectProduct: {
      std::vector<Element> parts;
      for (const auto& f : factors_) parts.push_back(f->identity());
      return join_product(parts);
    }
  }
  return Element{};
}

bool Group::is_identity(const Element& a) const { return a == identity(); }

void Group::validate(const Element& e) const {
  switch (spec_.family) {
    case Family::FreeAbelian:
      if (static_cast<int>(e.data.size()) != spec_.param)
        throw Error("bad exponent vector length");
      return;
    case Family::FiniteCyclic:
      if (e.data.size() != 1 || e.data[0] < 0 || e.data[0] >= spec_.param)
        throw Error("bad cyclic element");
      return;
    case Family::FiniteSymmetric: {
      if (static_cast<int>(e.data.size()) != spec_.param)
        throw Error("bad permutation length");
      std::vector<char> seen(spec_.param, 0);
      for (long long v : e.data) {
        if (v < 0 || v >= spec_.param || seen[v]) throw Error("not a permutation");
        seen[v] = 1;
      }
      return;
    }
    case Family::Free: {
      if (e.data.size() % 2) throw Error("odd syllable data");
      auto w = to_syllables(e);
      for (size_t i = 0; i < w.size(); ++i) {
        if (w[i].gen < 0 || w[i].gen >= spec_.param || w[i].exp == 0)
          throw Error("bad free-group syllable");
        if (i && w[i].gen == w[i - 1].gen) throw Error("unreduced word");
      }
      return;
    }
    case Family::FreeProductZZ3: {
      if (e.data.size() % 2) throw Error("odd syllable data");
      auto w = to_syllables(e);
      for (size_t i = 0; i < w.size(); ++i) {
        if (w[i].gen == 0) {
          if (w[i].exp == 0) throw Error("zero t exponent");
        } else if (w[i].gen == 1) {
          if (w[i].exp != 1 && w[i].exp != 2) throw Error("bad u exponent");
        } else {
          throw Error("bad generator index");
        }
        if (i && w[i].gen == w[i - 1].gen) throw Error("unreduced word");
      }
      return;
    }
    case Family::DirectProduct: {
      auto parts = split_product(e, factors_.size());
      for (size_t i = 0; i < parts.size(); ++i) factors_[i]->validate(parts[i]);
      return;
    }
  }
}

Element Group::multiply(const Element& a, const Element& b) const {
  validate(a);
  validate(b);
  return multiply_impl(a, b);
}

Element Group::multiply_impl(const Element& a, const Element& b) const {
  switch (spec_.family) {
    case Family::FreeAbelian: {
      Element c = a;
      for (int i = 0; i < spec_.param; ++i) c.data[i] += b.data[i];
      return c;
    }
    case Family::FiniteCyclic:
      return Element{{(a.data[0] + b.data[0]) % spec_.param}};
    case Family::FiniteSymmetric: {
      Element c;
      c.data.resize(spec_.param);
      for (int i = 0; i < spec_.param; ++i) c.data[i] = b.data[a.data[i]];
      return c;
    }
    case Family::Free:
      return from_syllables(multiply_words(to_syllables(a), to_syllables(b), -1));
    case Family::FreeProductZZ3:
      return from_syllables(multiply_words(to_syllables(a), to_syllables(b), 1));
    case Family::DirectProduct: {
      auto pa = split_product(a, factors_.size());
      auto pb = split_product(b, factors_.size());
      std::vector<Element> out;
      out.reserve(pa.size());
      for (size_t i = 0; i < pa.size(); ++i)
        out.push_back(factors_[i]->multiply_impl(pa[i], pb[i]));
      return join_product(out);
    }
  }
  return Element{};
}

Element Group::inverse(const Element& a) const {
  validate(a);
  switch (spec_.family) {
    case Family::FreeAbelian: {
      Element c = a;
      for (auto& v : c.data) v = -v;
      return c;
    }
    case Family::FiniteCyclic:
      return Element{{(spec_.param - a.data[0]) % spec_.param}};
    case Family::FiniteSymmetric: {
      Element c;
      c.data.resize(spec_.param);
      for (int i = 0; i < spec_.param; ++i) c.data[a.data[i]] = i;
      return c;
    }
    case Family::Free:
    case Family::FreeProductZZ3: {
      bool z3 = spec_.family == Family::FreeProductZZ3;
      auto w = to_syllables(a);
      std::reverse(w.begin(), w.end());
      for (auto& s : w) {
        if (z3 && s.gen == 1)
          s.exp = 3 - s.exp;
        else
          s.exp = -s.exp;
      }
      return from_syllables(w);
    }
    case Family::DirectProduct: {
      auto parts = split_product(a, factors_.size());
      std::vector<Element> out;
      for (size_t i = 0; i < parts.size(); ++i)
        out.push_back(factors_[i]->inverse(parts[i]));
      return join_product(out);
    }
  }
  return Element{};
}

Element Group::generator(int i) const {
  if (i < 0 || i >= generator_count()) throw Error("generator index out of range");
  switch (spec_.family) {
    case Family::FreeAbelian: {
      Element e = identity();
      e.data[i] = 1;
      return e;
    }
    case Family::FiniteCyclic:
      return Element{{1 % spec_.param}};
    case Family::FiniteSymmetric: {
      Element e = identity();
      if (i == 0) {
        std::swap(e.data[0], e.data[1]);
      } else {
        for (int j = 0; j < spec_.param; ++j)
          e.data[j] = (j + 1) % spec_.param;
      }
      return e;
    }
    case Family::Free:
      return Element{{i, 1}};
    case Family::FreeProductZZ3:
      return Element{{i, 1}};
    case Family::DirectProduct: {
      std::vector<Element> parts;
      int off = 0;
      for (const auto& f : factors_) {
        int cnt = f->generator_count();
        if (i >= off && i < off + cnt)
          parts.push_back(f->generator(i - off));
        else
          parts.push_back(f->identity());
        off += cnt;
      }
      return join_product(parts);
    }
  }
  return Element{};
}

GeneratingSet Group::default_generators() const {
  GeneratingSet s;
  for (int i = 0; i < generator_count(); ++i) s.gens.push_back(generator(i));
  return s;
}

Element Group::parse(const std::string& word) const {
  Element acc = identity();
  std::istringstream in(word);
  std::string tok;
  while (in >> tok) {
    if (tok == "e") continue;
    bool inv = std::isupper(static_cast<unsigned char>(tok[0])) != 0;
    std::string low = tok;
    low[0] = static_cast<char>(std::tolower(static_cast<unsigned char>(low[0])));
    int idx = -1;
    for (int i = 0; i < generator_count(); ++i)
      if (gen_names_[i] == low) idx = i;
    if (idx < 0) throw Error("unknown generator token: " + tok);
    Element g = generator(idx);
    if (inv) g = inverse(g);
    acc = multiply_impl(acc, g);
  }
  return acc;
}

namespace {

void emit(std::ostream& out, bool& first, const std::string& name, bool inv,
          long long count) {
  std::string tok = name;
  if (inv) tok[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(tok[0])));
  for (long long i = 0; i < count; ++i) {
    if (!first) out << ' ';
    out << tok;
    first = false;
  }
}

}  // namespace

std::string Group::to_string(const Element& e) const {
  validate(e);
  std::ostringstream out;
  bool first = true;
  switch (spec_.family) {
    case Family::FreeAbelian:
      for (int i = 0; i < spec_.param; ++i)
        emit(out, first, gen_names_[i], e.data[i] < 0, std::llabs(e.data[i]));
      break;
    case Family::FiniteCyclic:
      emit(out, first, "a", false, e.data[0]);
      break;
    case Family::FiniteSymmetric: {
      // Bubble-sort decomposition into adjacent transpositions; with words
      // applied left to right, the transposition (i, i+1) reads c^-i s c^i.
      std::vector<long long> v = e.data;
      for (size_t pass = 0; pass < v.size(); ++pass)
        for (size_t i = 0; i + 1 < v.size(); ++i)
          if (v[i] > v[i + 1]) {
            std::swap(v[i], v[i + 1]);
            emit(out, first, "c", true, static_cast<long long>(i));
            emit(out, first, "s", false, 1);
            emit(out, first, "c", false, static_cast<long long>(i));
          }
      break;
    }
    case Family::Free:
    case Family::FreeProductZZ3: {
      bool z3 = spec_.family == Family::FreeProductZZ3;
      for (const auto& s : to_syllables(e)) {
        const std::string& nm = gen_names_[static_cast<int>(s.gen)];
        if (z3 && s.gen == 1)  // u^2 = u^-1 is the single letter U
          emit(out, first, nm, s.exp == 2, 1);
        else
          emit(out, first, nm, s.exp < 0, std::llabs(s.exp));
      }
      break;
    }
    case Family::DirectProduct: {
      auto parts = split_product(e, factors_.size());
      int off = 0;
      for (size_t i = 0; i < parts.size(); ++i) {
        std::string w = factors_[i]->to_string(parts[i]);
        if (w != "e") {
          std::istringstream ws(w);
          std::string tok;
          while (ws >> tok) {
            bool inv = std::isupper(static_cast<unsigned char>(tok[0])) != 0;
            std::string low = tok;
            low[0] = static_cast<char>(std::tolower(static_cast<unsigned char>(low[0])));
            int fidx = -1;
            for (int j = 0; j < factors_[i]->generator_count(); ++j)
              if (factors_[i]->generator_name(j) == low) fidx = j;
            emit(out, first, gen_names_[off + fidx], inv, 1);
          }
        }
        off += factors_[i]->generator_count();
      }
      break;
    }
  }
  std::string s = out.str();
  return s.empty() ? "e" : s;
}

const Group& Group::factor(int i) const {
  if (i < 0 || i >= factor_count()) throw Error("factor index out of range");
  return *factors_[i];
}

std::vector<Element> Group::product_components(const Element& e) const {
  if (spec_.family != Family::DirectProduct) throw Error("not a direct product");
  return split_product(e, factors_.size());
}

Element Group::product_embed(int factor_index, const Element& part) const {
  if (spec_.family != Family::DirectProduct) throw Error("not a direct product");
  std::vector<Element> parts;
  for (int i = 0; i < factor_count(); ++i)
    parts.push_back(i == factor_index ? part : factors_[i]->identity());
  return join_product(parts);
}

std::vector<Element> GeneratingSet::symmetric_closure(const Group& g) const {
  std::vector<Element> out;
  for (const auto& x : gens) {
    if (g.is_identity(x)) continue;
    out.push_back(x);
    out.push_back(g.inverse(x));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

int Ball::index_of(const Element& e) const {
  auto it = std::lower_bound(elements.begin(), elements.end(), e);
  if (it == elements.end() || *it != e) return -1;
  return static_cast<int>(it - elements.begin());
}

Ball enumerate_ball(const Group& g, const GeneratingSet& s, int radius,
                    long long cap, const Element* center) {
  if (radius < 0) throw Error("negative radius");
  auto sym = s.symmetric_closure(g);
  std::map<Element, int> dist;
  std::deque<Element> queue;
  Element id = g.identity();
  dist[id] = 0;
  queue.push_back(id);
  while (!queue.empty()) {
    Element cur = queue.front();
    queue.pop_front();
    int d = dist[cur];
    if (d == radius) continue;
    for (const auto& x : sym) {
      Element nxt = g.multiply(cur, x);
      if (dist.count(nxt)) continue;
      if (static_cast<long long>(dist.size()) + 1 > cap)
        throw CapExceeded("ball size cap exceeded",
                          static_cast<long long>(dist.size()) + 1);
      dist[nxt] = d + 1;
      queue.push_back(nxt);
    }
  }

  Ball b;
  b.center = center ? *center : id;
  b.radius = radius;
  b.interior_radius = radius;
  if (center && !g.is_identity(*center)) {
    std::vector<std::pair<Element, int>> translated;
    translated.reserve(dist.size());
    for (const auto& [e, d] : dist)
      translated.emplace_back(g.multiply(*center, e), d);
    std::sort(translated.begin(), translated.end());
    for (auto& [e, d] : translated) {
      b.elements.push_back(std::move(e));
      b.distance.push_back(d);
    }
  } else {
    for (const auto& [e, d] : dist) {
      b.elements.push_back(e);
      b.distance.push_back(d);
    }
  }
  return b;
}

std::optional<int> word_distance(const Group& g, const GeneratingSet& s,
                                 const Element& a, const Element& b,
                                 int max_radius) {
  Element target = g.multiply(g.inverse(a), b);
  if (g.is_identity(target)) return 0;
  auto sym = s.symmetric_closure(g);
  std::map<Element, int> dist;
  std::deque<Element> queue;
  dist[g.identity()] = 0;
  queue.push_back(g.identity());
  while (!queue.empty()) {
    Element cur = queue.front();
    queue.pop_front();
    int d = dist[cur];
    if (d == max_radius) continue;
    for (const auto& x : sym) {
      Element nxt = g.multiply(cur, x);
      if (dist.count(nxt)) continue;
      if (nxt == target) return d + 1;
      dist[nxt] = d + 1;
      queue.push_back(nxt);
    }
  }
  return std::nullopt;  // radius exhausted
}

GeneratingSet power_generating_set(const Group& g, const GeneratingSet& s,
                                   int n, long long cap) {
  if (n < 1) throw Error("power must be at least 1");
  Ball b = enumerate_ball(g, s, n, cap);
  GeneratingSet out;
  for (const auto& e : b.elements)
    if (!g.is_identity(e)) out.gens.push_back(e);
  return out;
}

long long default_word_norm(const Group& g, const Element& e) {
  g.validate(e);
  switch (g.spec().family) {
    case Family::FreeAbelian: {
      long long n = 0;
      for (long long v : e.data) n += std::llabs(v);
      return n;
    }
    case Family::FiniteCyclic:
      return std::min(e.data[0], g.spec().param - e.data[0]);
    case Family::Free: {
      long long n = 0;
      for (size_t i = 1; i < e.data.size(); i += 2) n += std::llabs(e.data[i]);
      return n;
    }
    case Family::FreeProductZZ3: {
      // u and u^2 = u^-1 are both one letter.
      long long n = 0;
      for (size_t i = 0; i + 1 < e.data.size(); i += 2)
        n += e.data[i] == 1 ? 1 : std::llabs(e.data[i + 1]);
      return n;
    }
    case Family::DirectProduct: {
      // Generators move one component each, so lengths add.
      long long n = 0;
      Element rest = e;
      size_t pos = 0;
      for (const auto& f : g.spec().factors) {
        Group fg(f);
        long long len = rest.data[pos];
        Element part;
        part.data.assign(rest.data.begin() + pos + 1,
                         rest.data.begin() + pos + 1 + len);
        n += default_word_norm(fg, part);
        pos += 1 + static_cast<size_t>(len);
      }
      return n;
    }
    case Family::FiniteSymmetric: {
      if (g.is_identity(e)) return 0;
      auto d = word_distance(g, g.default_generators(), g.identity(), e, 1 << 20);
      if (!d) throw Error("norm search exhausted");
      return *d;
    }
  }
  return 0;
}

}  // namespace caykit
