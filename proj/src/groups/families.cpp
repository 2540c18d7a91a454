#include "groups/families.hpp"

#include <cctype>
#include <map>

namespace schurkit::groups {

const char* family_name(Family f) {
  switch (f) {
    case Family::C: return "C";
    case Family::D: return "D";
    case Family::Q: return "Q";
    case Family::Dplus: return "Dplus";
    case Family::Dminus: return "Dminus";
    case Family::W: return "W";
    case Family::W1: return "W1";
    case Family::W2: return "W2";
    case Family::V: return "V";
    case Family::V1: return "V1";
    case Family::V2: return "V2";
    case Family::U1: return "U1";
    case Family::U2: return "U2";
    case Family::T: return "T";
    case Family::T1: return "T1";
    case Family::T2: return "T2";
    case Family::T3: return "T3";
    case Family::S: return "S";
  }
  return "?";
}

namespace {

using Word = std::vector<std::pair<int, int>>;  // (generator, exponent)

// Polycyclic presentation: generator i has relative order p_i,
// g_i^{p_i} = power_i and g_j^{g_i} = conj_{i,j} (j > i), both words in
// normal form over generators after i.
class Pc {
 public:
  int gen(const std::string& name, int order) {
    names_.push_back(name);
    orders_.push_back(order);
    return static_cast<int>(names_.size()) - 1;
  }
  void power(int i, Word w) { power_[i] = std::move(w); }
  void conj(int j, int by, Word w) { conj_[{by, j}] = std::move(w); }

  GroupPtr build(const std::string& spec, std::vector<std::pair<std::string, Word>> extra);

 private:
  using Vec = std::vector<int>;
  void mul_gen(Vec& w, int i) const;
  void mul_word(Vec& w, const Vec& u) const;
  Vec normal(const Word& w) const;

  std::vector<std::string> names_;
  std::vector<int> orders_;
  std::map<int, Word> power_;
  std::map<std::pair<int, int>, Word> conj_;
};

Pc::Vec Pc::normal(const Word& w) const {
  Vec v(names_.size(), 0);
  for (auto [g, e] : w) v[g] = e;
  return v;
}

void Pc::mul_word(Vec& w, const Vec& u) const {
  for (std::size_t k = 0; k < u.size(); ++k)
    for (int e = 0; e < u[k]; ++e) mul_gen(w, static_cast<int>(k));
}

void Pc::mul_gen(Vec& w, int i) const {
  const int n = static_cast<int>(names_.size());
  Vec tail(n, 0);
  bool has_tail = false;
  for (int j = i + 1; j < n; ++j) {
    tail[j] = w[j];
    if (w[j]) has_tail = true;
    w[j] = 0;
  }
  if (++w[i] == orders_[i]) {
    w[i] = 0;
    auto it = power_.find(i);
    if (it != power_.end()) mul_word(w, normal(it->second));
  }
  if (!has_tail) return;
  // multiply by tail^{g_i}
  for (int j = i + 1; j < n; ++j) {
    if (!tail[j]) continue;
    auto it = conj_.find({i, j});
    Vec image = it != conj_.end() ? normal(it->second) : normal({{j, 1}});
    for (int e = 0; e < tail[j]; ++e) mul_word(w, image);
  }
}

std::string word_name(const std::vector<std::string>& names, const std::vector<int>& v) {
  std::string out;
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (!v[k]) continue;
    if (!out.empty()) out += "*";
    out += names[k];
    if (v[k] != 1) out += "^" + std::to_string(v[k]);
  }
  return out.empty() ? "1" : out;
}

GroupPtr Pc::build(const std::string& spec, std::vector<std::pair<std::string, Word>> extra) {
  const int n = static_cast<int>(names_.size());
  std::size_t order = 1;
  std::vector<std::size_t> stride(n);
  for (int i = 0; i < n; ++i) {
    stride[i] = order;
    order *= static_cast<std::size_t>(orders_[i]);
    if (order > size_cap())
      throw Error(ErrorCode::OrderOverflow, spec + " exceeds the size cap of " +
                                                std::to_string(size_cap()));
  }
  auto index = [&](const Vec& v) {
    std::size_t idx = 0;
    for (int i = 0; i < n; ++i) idx += static_cast<std::size_t>(v[i]) * stride[i];
    return static_cast<Elem>(idx);
  };
  std::vector<Vec> vecs(order, Vec(n, 0));
  for (std::size_t a = 0; a < order; ++a)
    for (int i = 0; i < n; ++i) vecs[a][i] = static_cast<int>(a / stride[i] % orders_[i]);

  // right multiplication by generators
  std::vector<Elem> right(order * n);
  for (std::size_t a = 0; a < order; ++a)
    for (int i = 0; i < n; ++i) {
      Vec w = vecs[a];
      mul_gen(w, i);
      right[a * n + i] = index(w);
    }

  // a*b = (a*b')*g_k where b' lowers the last nonzero exponent of b
  std::vector<std::uint16_t> table(order * order);
  std::vector<std::pair<Elem, int>> pred(order, {0, -1});
  for (std::size_t b = 1; b < order; ++b) {
    int k = n - 1;
    while (vecs[b][k] == 0) --k;
    pred[b] = {static_cast<Elem>(b - stride[k]), k};
  }
  for (std::size_t a = 0; a < order; ++a) {
    std::uint16_t* row = &table[a * order];
    row[0] = static_cast<std::uint16_t>(a);
    for (std::size_t b = 1; b < order; ++b)
      row[b] = static_cast<std::uint16_t>(right[std::size_t(row[pred[b].first]) * n + pred[b].second]);
  }

  // consistency: (a*b)*g = a*(b*g) for all a, b and generators g
  for (std::size_t a = 0; a < order; ++a) {
    const std::uint16_t* row = &table[a * order];
    for (std::size_t b = 0; b < order; ++b)
      for (int i = 0; i < n; ++i)
        if (right[std::size_t(row[b]) * n + i] != row[right[b * n + i]])
          throw Error(ErrorCode::PresentationInconsistent,
                      "presentation of " + spec + " is not consistent");
  }

  std::vector<std::pair<std::string, Elem>> labels;
  for (int i = 0; i < n; ++i) labels.emplace_back(names_[i], static_cast<Elem>(stride[i]));
  for (auto& [name, w] : extra) labels.emplace_back(name, index(normal(w)));
  std::vector<std::string> element_names(order);
  for (std::size_t a = 0; a < order; ++a) element_names[a] = word_name(names_, vecs[a]);
  return std::make_shared<FiniteGroup>(order, std::move(table), std::move(labels),
                                       std::move(element_names), spec);
}

void require(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorCode::InvalidSpec, what);
}

std::string bracket(const char* fam, long n) { return std::string(fam) + "[" + std::to_string(n) + "]"; }

bool is_power_of_two(long n) { return n > 0 && (n & (n - 1)) == 0; }

GroupPtr cyclic(long n) {
  require(n >= 1, "C[n] needs n >= 1");
  require(n <= static_cast<long>(size_cap()), "C[n] exceeds the size cap");
  Pc pc;
  if (n > 1) pc.gen("a", static_cast<int>(n));
  return pc.build(bracket("C", n), {});
}

GroupPtr dihedral(long order) {
  require(order >= 4 && order % 2 == 0, "D[2n] needs an even order >= 4");
  int n = static_cast<int>(order / 2);
  Pc pc;
  int b = pc.gen("b", 2), a = pc.gen("a", n);
  pc.conj(a, b, {{a, n - 1}});
  return pc.build(bracket("D", order), {});
}

GroupPtr quaternion(long order) {
  require(order >= 8 && order % 4 == 0, "Q[4n] needs an order divisible by 4 and >= 8");
  int n = static_cast<int>(order / 4);
  Pc pc;
  int b = pc.gen("b", 2), a = pc.gen("a", 2 * n);
  pc.power(b, {{a, n}});
  pc.conj(a, b, {{a, 2 * n - 1}});
  return pc.build(bracket("Q", order), {});
}

GroupPtr semidihedral(long order, bool plus) {
  require(is_power_of_two(order) && order >= 16, "Dplus/Dminus need a power of two >= 16");
  int m = static_cast<int>(order / 2);
  Pc pc;
  int b = pc.gen("b", 2), a = pc.gen("a", m);
  pc.conj(a, b, {{a, plus ? m / 2 + 1 : m / 2 - 1}});
  return pc.build(bracket(plus ? "Dplus" : "Dminus", order), {});
}

std::string idx(const std::string& base, long i) { return base + std::to_string(i); }

GroupPtr family_w() {
  Pc pc;
  int x = pc.gen("x", 2), y = pc.gen("y", 2), x2 = pc.gen("x_2", 2), y2 = pc.gen("y_2", 2),
      t = pc.gen("t", 2);
  pc.power(x, {{x2, 1}});
  pc.power(y, {{y2, 1}});
  pc.conj(y, x, {{y, 1}, {t, 1}});
  return pc.build("W", {});
}

GroupPtr family_w1(long n) {
  require(n >= 1, "W1[n] needs n >= 1");
  Pc pc;
  int x = pc.gen("x", 2), x2 = pc.gen("x_2", 2);
  pc.power(x, {{x2, 1}});
  std::vector<int> ys, ts;
  for (long i = 1; i <= n; ++i) ys.push_back(pc.gen(idx("y", i), 2));
  for (long i = 1; i <= n; ++i) ts.push_back(pc.gen(idx("t", i), 2));
  for (long i = 0; i < n; ++i) pc.conj(ys[i], x, {{ys[i], 1}, {ts[i], 1}});
  return pc.build(bracket("W1", n), {});
}

GroupPtr family_w2(long n) {
  require(n >= 1, "W2[n] needs n >= 1");
  Pc pc;
  int x = pc.gen("x", 2), x2 = pc.gen("x_2", 2);
  pc.power(x, {{x2, 1}});
  std::vector<std::pair<std::string, Word>> extra;
  for (long i = 1; i <= n; ++i) {
    int y = pc.gen(idx("y", i), 2), y2 = pc.gen(idx("y", i) + "_2", 2);
    pc.power(y, {{y2, 1}});
    pc.conj(y, x, {{y, 1}, {y2, 1}});
    extra.push_back({idx("t", i), {{y2, 1}}});
  }
  return pc.build(bracket("W2", n), extra);
}

GroupPtr family_v() {
  Pc pc;
  int x = pc.gen("x", 2), y = pc.gen("y", 2), x2 = pc.gen("x_2", 2), y2 = pc.gen("y_2", 2),
      x4 = pc.gen("x_4", 2), y4 = pc.gen("y_4", 2), t = pc.gen("t", 2);
  pc.power(x, {{x2, 1}});
  pc.power(x2, {{x4, 1}});
  pc.power(y, {{y2, 1}});
  pc.power(y2, {{y4, 1}});
  pc.conj(y, x, {{y, 1}, {t, 1}});
  return pc.build("V", {});
}

GroupPtr family_v1(long n) {
  require(n >= 1, "V1[n] needs n >= 1");
  Pc pc;
  int x = pc.gen("x", 2), x2 = pc.gen("x_2", 2), x4 = pc.gen("x_4", 2);
  pc.power(x, {{x2, 1}});
  pc.power(x2, {{x4, 1}});
  for (long i = 1; i <= n; ++i) {
    int y = pc.gen(idx("y", i), 2), y2 = pc.gen(idx("y", i) + "_2", 2), t = pc.gen(idx("t", i), 2);
    pc.power(y, {{y2, 1}});
    pc.conj(y, x, {{y, 1}, {t, 1}});
  }
  return pc.build(bracket("V1", n), {});
}

GroupPtr family_v2(long n) {
  require(n >= 1, "V2[n] needs n >= 1");
  Pc pc;
  int x = pc.gen("x", 2), x2 = pc.gen("x_2", 2), x4 = pc.gen("x_4", 2);
  pc.power(x, {{x2, 1}});
  pc.power(x2, {{x4, 1}});
  std::vector<std::pair<std::string, Word>> extra;
  for (long i = 1; i <= n; ++i) {
    int y = pc.gen(idx("y", i), 2), y2 = pc.gen(idx("y", i) + "_2", 2),
        y4 = pc.gen(idx("y", i) + "_4", 2);
    pc.power(y, {{y2, 1}});
    pc.power(y2, {{y4, 1}});
    pc.conj(y, x, {{y, 1}, {y4, 1}});
    extra.push_back({idx("t", i), {{y4, 1}}});
  }
  return pc.build(bracket("V2", n), extra);
}

GroupPtr family_u(bool second) {
  Pc pc;
  int y[3], sq[3];
  for (int i = 0; i < 3; ++i) y[i] = pc.gen(idx("y", i + 1), 2);
  for (int i = 0; i < 3; ++i) sq[i] = pc.gen(idx("y", i + 1) + "_2", 2);
  int t12 = pc.gen("t12", 2), t13 = pc.gen("t13", 2), t23 = pc.gen("t23", 2);
  for (int i = 0; i < 3; ++i) pc.power(y[i], {{sq[i], 1}});
  if (second) {
    pc.power(sq[1], {{t12, 1}});
    pc.power(sq[2], {{t13, 1}});
  }
  pc.conj(y[1], y[0], {{y[1], 1}, {t12, 1}});
  pc.conj(y[2], y[0], {{y[2], 1}, {t13, 1}});
  pc.conj(y[2], y[1], {{y[2], 1}, {t23, 1}});
  return pc.build(second ? "U2" : "U1", {});
}

GroupPtr family_t() {
  Pc pc;
  int x = pc.gen("x", 2), y = pc.gen("y", 2), y2 = pc.gen("y_2", 2), y4 = pc.gen("y_4", 2),
      t = pc.gen("t", 2), t2 = pc.gen("t_2", 2);
  pc.power(x, {{t2, 1}});
  pc.power(y, {{y2, 1}});
  pc.power(y2, {{y4, 1}});
  pc.power(t, {{t2, 1}});
  pc.conj(y, x, {{y, 1}, {t, 1}, {t2, 1}});
  pc.conj(y2, x, {{y2, 1}, {t2, 1}});
  pc.conj(t, x, {{t, 1}, {t2, 1}});
  return pc.build("T", {});
}

GroupPtr family_t1(long n) {
  require(n >= 1, "T1[n] needs n >= 1");
  Pc pc;
  int x = pc.gen("x", 2), x2 = pc.gen("x_2", 2), x4 = pc.gen("x_4", 2);
  pc.power(x, {{x2, 1}});
  pc.power(x2, {{x4, 1}});
  for (long i = 1; i <= n; ++i) {
    int y = pc.gen(idx("y", i), 2), y2 = pc.gen(idx("y", i) + "_2", 2),
        t = pc.gen(idx("t", i), 2), t2 = pc.gen(idx("t", i) + "_2", 2);
    pc.power(y, {{y2, 1}});
    pc.power(t, {{t2, 1}});
    pc.conj(y, x, {{y, 1}, {t, 1}, {t2, 1}});
    pc.conj(y2, x, {{y2, 1}, {t2, 1}});
    pc.conj(t, x, {{t, 1}, {t2, 1}});
  }
  return pc.build(bracket("T1", n), {});
}

GroupPtr family_t2(long n) {
  require(n >= 1, "T2[n] needs n >= 1");
  Pc pc;
  int x = pc.gen("x", 2), x2 = pc.gen("x_2", 2);
  pc.power(x, {{x2, 1}});
  std::vector<std::pair<std::string, Word>> extra;
  for (long i = 1; i <= n; ++i) {
    int y = pc.gen(idx("y", i), 2), y2 = pc.gen(idx("y", i) + "_2", 2),
        y4 = pc.gen(idx("y", i) + "_4", 2);
    pc.power(y, {{y2, 1}});
    pc.power(y2, {{y4, 1}});
    pc.conj(y, x, {{y, 1}, {y2, 1}});
    pc.conj(y2, x, {{y2, 1}, {y4, 1}});
    extra.push_back({idx("t", i), {{y2, 1}, {y4, 1}}});
  }
  return pc.build(bracket("T2", n), extra);
}

GroupPtr family_t3(long n) {
  require(n >= 1, "T3[n] needs n >= 1");
  Pc pc;
  int x = pc.gen("x", 2), y1 = pc.gen("y1", 2), y12 = pc.gen("y1_2", 2), y14 = pc.gen("y1_4", 2),
      c = pc.gen("c", 2);
  pc.power(x, {{y14, 1}});
  pc.power(y1, {{y12, 1}});
  pc.power(y12, {{y14, 1}});
  pc.conj(y1, x, {{y1, 1}, {y12, 1}, {c, 1}});
  pc.conj(y12, x, {{y12, 1}, {y14, 1}});
  std::vector<std::pair<std::string, Word>> extra{{"t1", {{y12, 1}, {y14, 1}, {c, 1}}}};
  for (long i = 2; i <= n; ++i) {
    int y = pc.gen(idx("y", i), 2), y2 = pc.gen(idx("y", i) + "_2", 2);
    pc.power(y, {{y2, 1}});
    pc.conj(y, x, {{y, 1}, {y2, 1}});
    extra.push_back({idx("t", i), {{y2, 1}}});
  }
  return pc.build(bracket("T3", n), extra);
}

// C_3^n x| P with Q centralizing and P \ Q inverting.
GroupPtr family_s(long n, const GroupPtr& p, const std::vector<Elem>& q_gens,
                  const std::string& q_text) {
  require(n >= 1, "S[n,P,Q] needs n >= 1");
  require(p != nullptr, "S[n,P,Q] needs P");
  Subgroup q = generate(*p, q_gens);
  require(q.order() * 2 == p->order(), "S[n,P,Q] needs Q of index 2 in P");
  std::size_t z = 1;
  for (long i = 0; i < n; ++i) {
    z *= 3;
    if (z * p->order() > size_cap())
      throw Error(ErrorCode::OrderOverflow, "S group exceeds the size cap");
  }
  const std::size_t order = z * p->order();
  auto add = [&](std::size_t u, std::size_t v, bool invert) {
    std::size_t r = 0, s = 1;
    for (long i = 0; i < n; ++i, s *= 3) {
      long du = static_cast<long>(u / s % 3), dv = static_cast<long>(v / s % 3);
      r += static_cast<std::size_t>(num::mod(du + (invert ? -dv : dv), 3)) * s;
    }
    return r;
  };
  std::vector<std::uint16_t> table(order * order);
  for (std::size_t a = 0; a < order; ++a)
    for (std::size_t b = 0; b < order; ++b) {
      Elem pa = static_cast<Elem>(a / z), pb = static_cast<Elem>(b / z);
      std::size_t zz = add(a % z, b % z, !q.contains(pa));
      table[a * order + b] = static_cast<std::uint16_t>(p->mul(pa, pb) * z + zz);
    }
  std::vector<std::pair<std::string, Elem>> labels;
  std::size_t s = 1;
  for (long i = 1; i <= n; ++i, s *= 3) labels.emplace_back(idx("z", i), static_cast<Elem>(s));
  for (const auto& [name, e] : p->labels()) labels.emplace_back(name, static_cast<Elem>(e * z));
  std::vector<std::string> names(order);
  for (std::size_t a = 0; a < order; ++a) {
    std::string w;
    std::size_t t = 1;
    for (long i = 1; i <= n; ++i, t *= 3) {
      long d = static_cast<long>(a % z / t % 3);
      if (!d) continue;
      if (!w.empty()) w += "*";
      w += idx("z", i) + (d == 2 ? "^2" : "");
    }
    const std::string& pn = p->element_name(static_cast<Elem>(a / z));
    if (pn != "1") w += (w.empty() ? "" : "*") + pn;
    names[a] = w.empty() ? "1" : w;
  }
  std::string spec = "S[" + std::to_string(n) + "," + p->spec() + "," + q_text + "]";
  return std::make_shared<FiniteGroup>(order, std::move(table), std::move(labels),
                                       std::move(names), spec);
}

// Labels for commutators, checked against the presentation's own symbols.
GroupPtr with_commutator_labels(GroupPtr g, const GroupSpec& spec) {
  auto check = [&](const std::string& t, const std::string& a, const std::string& b) {
    auto te = g->label(t), ae = g->label(a), be = g->label(b);
    if (!te || !ae || !be || *te != g->comm(*ae, *be))
      throw Error(ErrorCode::PresentationInconsistent,
                  g->spec() + ": " + t + " is not the commutator (" + a + "," + b + ")");
  };
  switch (spec.family) {
    case Family::W:
    case Family::V:
    case Family::T:
      check("t", "y", "x");
      break;
    case Family::W1:
    case Family::W2:
    case Family::V1:
    case Family::V2:
    case Family::T1:
    case Family::T2:
    case Family::T3:
      for (long i = 1; i <= spec.n; ++i) check(idx("t", i), idx("y", i), "x");
      break;
    case Family::U1:
    case Family::U2:
      check("t12", "y2", "y1");
      check("t13", "y3", "y1");
      check("t23", "y3", "y2");
      break;
    default:
      break;
  }
  return g;
}

}  // namespace

GroupPtr build_group(const GroupSpec& spec) {
  GroupPtr g;
  switch (spec.family) {
    case Family::C: g = cyclic(spec.n); break;
    case Family::D: g = dihedral(spec.n); break;
    case Family::Q: g = quaternion(spec.n); break;
    case Family::Dplus: g = semidihedral(spec.n, true); break;
    case Family::Dminus: g = semidihedral(spec.n, false); break;
    case Family::W: g = family_w(); break;
    case Family::W1: g = family_w1(spec.n); break;
    case Family::W2: g = family_w2(spec.n); break;
    case Family::V: g = family_v(); break;
    case Family::V1: g = family_v1(spec.n); break;
    case Family::V2: g = family_v2(spec.n); break;
    case Family::U1: g = family_u(false); break;
    case Family::U2: g = family_u(true); break;
    case Family::T: g = family_t(); break;
    case Family::T1: g = family_t1(spec.n); break;
    case Family::T2: g = family_t2(spec.n); break;
    case Family::T3: g = family_t3(spec.n); break;
    case Family::S: g = family_s(spec.n, spec.p, spec.q_gens, spec.q_text); break;
  }
  return with_commutator_labels(std::move(g), spec);
}

namespace {

std::string prefix_word(const std::string& word, const std::string& prefix) {
  if (word == "1") return "";
  std::string out;
  std::size_t start = 0;
  while (start <= word.size()) {
    std::size_t end = word.find('*', start);
    if (end == std::string::npos) end = word.size();
    if (!out.empty()) out += "*";
    out += prefix + word.substr(start, end - start);
    start = end + 1;
  }
  return out;
}

std::string factor_spec(const std::string& s) {
  // bare family specs never contain an uppercase-led 'x' separator
  for (std::size_t i = 0; i + 1 < s.size(); ++i)
    if (s[i] == 'x' && (std::isupper(static_cast<unsigned char>(s[i + 1])) || s[i + 1] == '('))
      return s.front() == '(' && s.back() == ')' ? s : "(" + s + ")";
  return s;
}

}  // namespace

GroupPtr direct_product(const std::vector<GroupPtr>& factors) {
  if (factors.empty()) return cyclic(1);
  if (factors.size() == 1) return factors.front();
  std::size_t order = 1;
  for (const auto& f : factors) {
    order *= f->order();
    if (order > size_cap())
      throw Error(ErrorCode::OrderOverflow, "direct product of order " + std::to_string(order) +
                                                " exceeds the size cap");
  }
  const std::size_t m = factors.size();
  std::vector<std::size_t> stride(m);
  std::size_t s = 1;
  for (std::size_t i = m; i-- > 0;) {
    stride[i] = s;
    s *= factors[i]->order();
  }
  auto comp = [&](std::size_t a, std::size_t i) { return static_cast<Elem>(a / stride[i] % factors[i]->order()); };
  std::vector<std::uint16_t> table(order * order);
  for (std::size_t a = 0; a < order; ++a)
    for (std::size_t b = 0; b < order; ++b) {
      std::size_t c = 0;
      for (std::size_t i = 0; i < m; ++i) c += factors[i]->mul(comp(a, i), comp(b, i)) * stride[i];
      table[a * order + b] = static_cast<std::uint16_t>(c);
    }
  std::vector<std::pair<std::string, Elem>> labels;
  std::string spec;
  for (std::size_t i = 0; i < m; ++i) {
    std::string pre = "f" + std::to_string(i + 1) + ".";
    for (const auto& [name, e] : factors[i]->labels())
      labels.emplace_back(pre + name, static_cast<Elem>(e * stride[i]));
    spec += (i ? "x" : "") + factor_spec(factors[i]->spec());
  }
  std::vector<std::string> names(order);
  for (std::size_t a = 0; a < order; ++a) {
    std::string w;
    for (std::size_t i = 0; i < m; ++i) {
      std::string part = prefix_word(factors[i]->element_name(comp(a, i)),
                                     "f" + std::to_string(i + 1) + ".");
      if (part.empty()) continue;
      w += (w.empty() ? "" : "*") + part;
    }
    names[a] = w.empty() ? "1" : w;
  }
  return std::make_shared<FiniteGroup>(order, std::move(table), std::move(labels),
                                       std::move(names), spec);
}

GroupPtr direct_product(const FiniteGroup& g1, const FiniteGroup& g2) {
  auto keep = [](const FiniteGroup& g) { return GroupPtr(&g, [](const FiniteGroup*) {}); };
  return direct_product(std::vector<GroupPtr>{keep(g1), keep(g2)});
}

}  // namespace schurkit::groups
