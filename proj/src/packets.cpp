#include "voganish/packets.hpp"

#include <sstream>

namespace voganish {

std::string VirtualRep::str() const {
  std::ostringstream os;
  bool first = true;
  for (const auto& [key, c] : coeff) {
    std::string cs = c.str();
    if (!first) os << " + ";
    os << "(" << cs << ")[" << key.first << "," << key.second << "]";
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

std::set<std::pair<std::string, std::string>> abv_packet(const ExampleBundle& b, int stratum) {
  std::set<std::pair<std::string, std::string>> out;
  for (size_t s = 0; s < b.simples.size(); ++s)
    if (!b.evs[s][stratum].zero()) out.insert({b.simple_rep[s], b.simple_form[s]});
  return out;
}

ArthurSheaf arthur_sheaf(const ExampleBundle& b, int stratum) {
  ArthurSheaf as;
  for (size_t s = 0; s < b.simples.size(); ++s) {
    long r = b.evs[s][stratum].rank();
    if (r == 0) continue;
    if (b.simples[s].stratum == stratum)
      as.packet[static_cast<int>(s)] = r;
    else
      as.coronal[static_cast<int>(s)] = r;
  }
  return as;
}

VirtualRep eta_nevs(const ExampleBundle& b, int stratum, const GroupElement& a_s) {
  const StratumData& st = b.strata[stratum];
  VirtualRep out;
  for (size_t s = 0; s < b.simples.size(); ++s) {
    MicroKClass cls = b.nevs_entry(static_cast<int>(s), stratum);
    if (cls.zero()) continue;
    QI tr = cls.trace(st.a_mic, a_s);
    long parity = (st.declared_dim - b.dim_supp(static_cast<int>(s))) % 2;
    QI sign = QI(parity == 0 ? 1 : -1);
    QI e = QI(b.kottwitz(b.simple_form[s]));
    out.add(b.simple_rep[s], b.simple_form[s], e * sign * tr);
  }
  return out;
}

std::vector<GroupElement> all_elements(const FiniteAbelianGroup& g) {
  std::vector<GroupElement> out;
  GroupElement idx(g.orders.size(), 0);
  while (true) {
    out.push_back(idx);
    size_t k = 0;
    while (k < idx.size() && ++idx[k] == g.orders[k]) idx[k++] = 0;
    if (k == idx.size()) break;
    if (idx.empty()) break;
  }
  if (g.orders.empty()) out.assign(1, GroupElement{});
  return out;
}

GroupElement mul_elements(const FiniteAbelianGroup& g, const GroupElement& a,
                          const GroupElement& b) {
  GroupElement c(a.size());
  for (size_t k = 0; k < a.size(); ++k) c[k] = (a[k] + b[k]) % g.orders[k];
  return c;
}

VirtualRep eta_arthur(const ExampleBundle& b, const ArthurParam& psi, const GroupElement& s) {
  const StratumData& st = b.stratum(psi.stratum);
  GroupElement t = mul_elements(st.a_mic, s, psi.s_psi);
  VirtualRep out;
  for (const auto& m : psi.packet) {
    QI v = m.pairing.value_at(st.a_mic, t);
    out.add(m.rep, m.form, QI(b.kottwitz(m.form)) * v);
  }
  return out;
}

bool kl_transpose_check(const ExampleBundle& b, std::string& first_mismatch) {
  size_t n = b.simples.size();
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j)
      if (b.m_rep[i][j] != b.m_geo_prime[j][i]) {
        first_mismatch = "m_rep[" + b.simples[i].name + "][" + b.simples[j].name +
                         "] = " + std::to_string(b.m_rep[i][j]) + " but m'_geo transpose has " +
                         std::to_string(b.m_geo_prime[j][i]);
        return false;
      }
  return true;
}

}  // namespace voganish
