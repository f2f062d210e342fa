#include <stdexcept>

#include "stemlie/root_system.hpp"

namespace stemlie {

// Orthonormal-basis coordinates of the simple roots, one fixed model per
// family. Positive roots get the expected classical expressions (e_i - e_j,
// e_i + e_j, 2e_k, half-sum vectors for E and F).
std::vector<std::vector<Rational>> emodel_simple_roots(const SimpleComponentSpec& c) {
  const int n = c.rank;
  std::vector<std::vector<Rational>> out;
  auto vec = [](int dim) { return std::vector<Rational>(dim, Rational(0)); };
  switch (c.family) {
    case Family::A:
      for (int i = 0; i < n; ++i) {
        auto v = vec(n + 1);
        v[i] = 1;
        v[i + 1] = -1;
        out.push_back(v);
      }
      break;
    case Family::B:
      for (int i = 0; i + 1 < n; ++i) {
        auto v = vec(n);
        v[i] = 1;
        v[i + 1] = -1;
        out.push_back(v);
      }
      {
        auto v = vec(n);
        v[n - 1] = 1;
        out.push_back(v);
      }
      break;
    case Family::C:
      for (int i = 0; i + 1 < n; ++i) {
        auto v = vec(n);
        v[i] = 1;
        v[i + 1] = -1;
        out.push_back(v);
      }
      {
        auto v = vec(n);
        v[n - 1] = 2;
        out.push_back(v);
      }
      break;
    case Family::D:
      for (int i = 0; i + 1 < n; ++i) {
        auto v = vec(n);
        v[i] = 1;
        v[i + 1] = -1;
        out.push_back(v);
      }
      {
        auto v = vec(n);
        v[n - 2] = 1;
        v[n - 1] = 1;
        out.push_back(v);
      }
      break;
    case Family::E: {
      const Rational h(1, 2);
      auto a1 = vec(8);
      a1[0] = h;
      a1[7] = h;
      for (int i = 1; i <= 6; ++i) a1[i] = -h;
      out.push_back(a1);
      auto a2 = vec(8);
      a2[0] = 1;
      a2[1] = 1;
      out.push_back(a2);
      for (int i = 3; i <= n; ++i) {
        auto v = vec(8);
        v[i - 2] = 1;
        v[i - 3] = -1;
        out.push_back(v);
      }
      break;
    }
    case Family::F: {
      const Rational h(1, 2);
      auto a1 = vec(4);
      a1[1] = 1;
      a1[2] = -1;
      auto a2 = vec(4);
      a2[2] = 1;
      a2[3] = -1;
      auto a3 = vec(4);
      a3[3] = 1;
      auto a4 = vec(4);
      a4[0] = h;
      a4[1] = -h;
      a4[2] = -h;
      a4[3] = -h;
      out = {a1, a2, a3, a4};
      break;
    }
    case Family::G: {
      auto a1 = vec(3);
      a1[0] = 1;
      a1[1] = -1;
      auto a2 = vec(3);
      a2[0] = -2;
      a2[1] = 1;
      a2[2] = 1;
      out = {a1, a2};
      break;
    }
  }
  return out;
}

std::vector<Rational> emodel_vector(const SimpleComponentSpec& c, const std::vector<int>& coords) {
  auto simple = emodel_simple_roots(c);
  if (coords.size() != simple.size()) throw std::invalid_argument("emodel_vector: wrong coordinate count");
  std::vector<Rational> v(simple[0].size(), Rational(0));
  for (size_t i = 0; i < coords.size(); ++i)
    for (size_t j = 0; j < v.size(); ++j) v[j] += coords[i] * simple[i][j];
  return v;
}

std::string emodel_to_string(const std::vector<Rational>& v) {
  std::string s = "(";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += v[i].get_str();
  }
  return s + ")";
}

} // namespace stemlie
