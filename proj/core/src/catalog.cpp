#include "weylkit/catalog.hpp"

#include <map>

namespace weylkit {

namespace {

using Op = WeylOperator;

struct Builder {
  int n;

  Op x(int j) const { return Op::variable(n, Var::X, j); }
  Op y(int j) const { return Op::variable(n, Var::Y, j); }
  Op q(int j) const { return Op::variable(n, Var::Q, j); }
  Op dx(int j) const { return Op::derivative(n, Var::X, j); }
  Op dy(int j) const { return Op::derivative(n, Var::Y, j); }
  Op dq(int j) const { return Op::derivative(n, Var::Q, j); }
  Op c(const GaussianRational& v) const { return Op::constant(n, v); }
  Op zero() const { return Op(n); }

  static GaussianRational i() { return GaussianRational::i(); }
  static GaussianRational half() { return GaussianRational::ratio(1, 2); }

  template <class F>
  Op sum(F&& f) const {
    Op out(n);
    for (int j = 1; j <= n; ++j) out += f(j);
    return out;
  }

  Op dirac() const { return sum([&](int j) { return i() * (q(j) * dy(j)) - dq(j) * dx(j); }); }
  Op dirac_dual() const { return sum([&](int j) { return i() * (q(j) * x(j)) + dq(j) * y(j); }); }
  Op twist() const { return sum([&](int j) { return i() * (q(j) * dx(j)) + dy(j) * dq(j); }); }
  Op twist_dual() const { return sum([&](int j) { return x(j) * dq(j) - i() * (y(j) * q(j)); }); }
  Op euler() const { return sum([&](int j) { return x(j) * dx(j) + y(j) * dy(j); }); }
  Op laplace() const { return sum([&](int j) { return dx(j) * dx(j) + dy(j) * dy(j); }); }
  Op radius2() const { return sum([&](int j) { return x(j) * x(j) + y(j) * y(j); }); }
  Op rotation() const { return sum([&](int j) { return i() * (x(j) * dy(j) - y(j) * dx(j)); }); }
  Op oscillator() const {
    return rotation() + sum([&](int j) { return dq(j) * dq(j) - q(j) * q(j); });
  }
  Op hermite() const { return half() * sum([&](int j) { return dq(j) * dq(j) - q(j) * q(j); }); }

  Op sp_x(int j, int k) const {
    Op out = x(j) * dx(k) - y(k) * dy(j) - q(k) * dq(j);
    if (j == k) out -= c(half());
    return out;
  }
  Op sp_y(int j, int k) const {
    if (j == k) return x(j) * dy(j) + (half() * i()) * (dq(j) * dq(j));
    return x(j) * dy(k) + x(k) * dy(j) + i() * (dq(j) * dq(k));
  }
  Op sp_z(int j, int k) const {
    if (j == k) return y(j) * dx(j) + (half() * i()) * (q(j) * q(j));
    return y(j) * dx(k) + y(k) * dx(j) + i() * (q(j) * q(k));
  }
  Op sp_xt(int j, int k) const {
    // spinor indices as q_j dq_k; the q_k dq_j order breaks invariance of Dt_s
    Op out = x(j) * dx(k) - y(k) * dy(j) + q(j) * dq(k);
    if (j == k) out += c(half());
    return out;
  }
  Op sp_yt(int j, int k) const {
    if (j == k) return x(j) * dy(j) - (half() * i()) * (q(j) * q(j));
    return x(j) * dy(k) + x(k) * dy(j) - i() * (q(j) * q(k));
  }
  Op sp_zt(int j, int k) const {
    if (j == k) return y(j) * dx(j) - (half() * i()) * (dq(j) * dq(j));
    return y(j) * dx(k) + y(k) * dx(j) - i() * (dq(j) * dq(k));
  }
  Op u_a(int j, int k) const {
    return y(j) * dx(k) + y(k) * dx(j) - x(j) * dy(k) - x(k) * dy(j) +
           i() * (q(j) * q(k) - dq(j) * dq(k));
  }
  Op u_b(int j) const {
    return y(j) * dx(j) - x(j) * dy(j) + (half() * i()) * (q(j) * q(j) - dq(j) * dq(j));
  }
  Op u_c(int j, int k) const {
    return x(j) * dx(k) - x(k) * dx(j) + y(j) * dy(k) - y(k) * dy(j) + q(j) * dq(k) -
           q(k) * dq(j);
  }
};

enum class Constraint { None, Single, Any, LessEq, Less, Equal };

const std::map<std::string, std::string, std::less<>>& aliases() {
  static const std::map<std::string, std::string, std::less<>> table = {
      {"~D_s", "Dt_s"},   {"~X_s", "Xt_s"},     {"DsTilde", "Dt_s"}, {"XsTilde", "Xt_s"},
      {"Δ", "Delta"},      {"r^2", "r2"},        {"E_n", "E+n"},      {"D_z^dag", "D_zdag"},
      {"D_z†", "D_zdag"}, {"F^dag", "Fdag"},    {"𝔼", "E"},          {"1", "one"},
  };
  return table;
}

const std::map<std::string, Constraint, std::less<>>& entries() {
  static const std::map<std::string, Constraint, std::less<>> table = {
      {"D_s", Constraint::None},    {"X_s", Constraint::None},   {"Dt_s", Constraint::None},
      {"Xt_s", Constraint::None},   {"E", Constraint::None},     {"E+n", Constraint::None},
      {"Delta", Constraint::None},  {"r2", Constraint::None},    {"O", Constraint::None},
      {"H", Constraint::None},      {"D_z", Constraint::None},   {"D_zdag", Constraint::None},
      {"Rot", Constraint::None},    {"one", Constraint::None},   {"F", Constraint::Single},
      {"Fdag", Constraint::Single}, {"dz", Constraint::Single},  {"dzbar", Constraint::Single},
      {"x", Constraint::Single},    {"y", Constraint::Single},   {"q", Constraint::Single},
      {"dx", Constraint::Single},   {"dy", Constraint::Single},  {"dq", Constraint::Single},
      {"X", Constraint::Any},       {"Xt", Constraint::Any},     {"Y", Constraint::LessEq},
      {"Z", Constraint::LessEq},    {"Yt", Constraint::LessEq},  {"Zt", Constraint::LessEq},
      {"A", Constraint::Less},      {"C", Constraint::Less},     {"B", Constraint::Equal},
  };
  return table;
}

Constraint lookup(std::string_view name) {
  const std::string canon = canonical_name(name);
  auto it = entries().find(canon);
  if (it == entries().end()) throw UnknownOperator("unknown operator: " + std::string(name));
  return it->second;
}

void check_indices(std::string_view name, int n, Constraint c, const std::optional<IndexPair>& ix) {
  auto fail = [&](const std::string& why) {
    throw std::out_of_range("operator " + std::string(name) + ": " + why);
  };
  if (c == Constraint::None) {
    if (ix) fail("takes no indices");
    return;
  }
  if (!ix) fail("indices required");
  auto in_range = [&](int v) { return v >= 1 && v <= n; };
  if (!in_range(ix->j)) fail("index j=" + std::to_string(ix->j) + " outside 1.." + std::to_string(n));
  if (c == Constraint::Single) {
    if (ix->k != ix->j && ix->k != 0) fail("takes a single index");
    return;
  }
  if (!in_range(ix->k)) fail("index k=" + std::to_string(ix->k) + " outside 1.." + std::to_string(n));
  if (c == Constraint::LessEq && ix->j > ix->k) fail("requires j <= k");
  if (c == Constraint::Less && ix->j >= ix->k) fail("requires j < k");
  if (c == Constraint::Equal && ix->j != ix->k) fail("requires j == k");
}

}  // namespace

std::string canonical_name(std::string_view name) {
  auto it = aliases().find(name);
  return it == aliases().end() ? std::string(name) : it->second;
}

bool catalog_contains(std::string_view name) {
  return entries().count(canonical_name(name)) > 0;
}

int catalog_arity(std::string_view name) {
  switch (lookup(name)) {
    case Constraint::None: return 0;
    case Constraint::Single: return 1;
    default: return 2;
  }
}

WeylOperator catalog(std::string_view name, int n, std::optional<IndexPair> indices) {
  if (n < 1) throw std::invalid_argument("n must be positive");
  const Constraint constraint = lookup(name);
  check_indices(name, n, constraint, indices);
  const std::string key = canonical_name(name);
  const Builder b{n};
  const int j = indices ? indices->j : 0;
  const int k = indices ? indices->k : 0;
  const GaussianRational i = GaussianRational::i();
  const GaussianRational half = GaussianRational::ratio(1, 2);

  if (key == "D_s") return b.dirac();
  if (key == "X_s") return b.dirac_dual();
  if (key == "Dt_s") return b.twist();
  if (key == "Xt_s") return b.twist_dual();
  if (key == "E") return b.euler();
  if (key == "E+n") return b.euler() + b.c(n);
  if (key == "Delta") return b.laplace();
  if (key == "r2") return b.radius2();
  if (key == "O") return b.oscillator();
  if (key == "H") return b.hermite();
  if (key == "Rot") return b.rotation();
  if (key == "one") return b.c(1);
  if (key == "D_z") return half * (b.dirac() + i * b.twist());
  if (key == "D_zdag") return half * (b.dirac() - i * b.twist());
  if (key == "F") return b.q(j) + b.dq(j);
  if (key == "Fdag") return b.q(j) - b.dq(j);
  if (key == "dz") return half * (b.dx(j) - i * b.dy(j));
  if (key == "dzbar") return half * (b.dx(j) + i * b.dy(j));
  if (key == "x") return b.x(j);
  if (key == "y") return b.y(j);
  if (key == "q") return b.q(j);
  if (key == "dx") return b.dx(j);
  if (key == "dy") return b.dy(j);
  if (key == "dq") return b.dq(j);
  if (key == "X") return b.sp_x(j, k);
  if (key == "Y") return b.sp_y(j, k);
  if (key == "Z") return b.sp_z(j, k);
  if (key == "Xt") return b.sp_xt(j, k);
  if (key == "Yt") return b.sp_yt(j, k);
  if (key == "Zt") return b.sp_zt(j, k);
  if (key == "A") return b.u_a(j, k);
  if (key == "B") return b.u_b(j);
  if (key == "C") return b.u_c(j, k);
  throw UnknownOperator("unknown operator: " + std::string(name));
}

std::vector<std::pair<std::string, WeylOperator>> catalog_instances(int n) {
  std::vector<std::pair<std::string, WeylOperator>> out;
  for (const auto& [name, constraint] : entries()) {
    switch (constraint) {
      case Constraint::None:
        out.emplace_back(name, catalog(name, n));
        break;
      case Constraint::Single:
        for (int j = 1; j <= n; ++j) {
          out.emplace_back(name + "[" + std::to_string(j) + "]", catalog(name, n, IndexPair{j, j}));
        }
        break;
      default:
        for (int j = 1; j <= n; ++j) {
          for (int k = 1; k <= n; ++k) {
            if (constraint == Constraint::LessEq && j > k) continue;
            if (constraint == Constraint::Less && j >= k) continue;
            if (constraint == Constraint::Equal && j != k) continue;
            out.emplace_back(name + "[" + std::to_string(j) + "," + std::to_string(k) + "]",
                             catalog(name, n, IndexPair{j, k}));
          }
        }
    }
  }
  return out;
}

namespace {

std::vector<WeylOperator> sp_family(int n, const char* xn, const char* yn, const char* zn) {
  std::vector<WeylOperator> out;
  for (int j = 1; j <= n; ++j) {
    for (int k = j; k <= n; ++k) {
      out.push_back(catalog(xn, n, IndexPair{j, k}));
      out.push_back(catalog(yn, n, IndexPair{j, k}));
      out.push_back(catalog(zn, n, IndexPair{j, k}));
    }
  }
  return out;
}

}  // namespace

std::vector<WeylOperator> sp_realization_first(int n) { return sp_family(n, "X", "Y", "Z"); }
std::vector<WeylOperator> sp_realization_second(int n) { return sp_family(n, "Xt", "Yt", "Zt"); }

std::vector<WeylOperator> unitary_family(int n) {
  std::vector<WeylOperator> out;
  for (int j = 1; j <= n; ++j) {
    out.push_back(catalog("B", n, IndexPair{j, j}));
    for (int k = j + 1; k <= n; ++k) {
      out.push_back(catalog("A", n, IndexPair{j, k}));
      out.push_back(catalog("C", n, IndexPair{j, k}));
    }
  }
  return out;
}

std::vector<std::string> su12_generator_names() {
  return {"D_s", "Dt_s", "Delta", "X_s", "E+n", "O", "Xt_s", "r2"};
}

std::vector<WeylOperator> su12_generators(int n) {
  std::vector<WeylOperator> out;
  for (const auto& name : su12_generator_names()) out.push_back(catalog(name, n));
  return out;
}

}  // namespace weylkit
