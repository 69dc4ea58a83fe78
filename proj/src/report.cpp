#include "voganish/report.hpp"

#include <sstream>

namespace voganish {

namespace {

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  std::string emit(ReportFormat fmt) const {
    std::ostringstream os;
    auto esc = [&](const std::string& s) {
      if (fmt == ReportFormat::Markdown) return s;
      bool needs = s.find(',') != std::string::npos || s.find('"') != std::string::npos;
      if (!needs) return s;
      std::string out = "\"";
      for (char c : s) {
        if (c == '"') out += '"';
        out += c;
      }
      out += '"';
      return out;
    };
    if (fmt == ReportFormat::Markdown) {
      os << "|";
      for (const auto& h : header) os << " " << h << " |";
      os << "\n|";
      for (size_t k = 0; k < header.size(); ++k) os << " --- |";
      os << "\n";
      for (const auto& r : rows) {
        os << "|";
        for (const auto& c : r) os << " " << (c.empty() ? "." : c) << " |";
        os << "\n";
      }
    } else {
      for (size_t k = 0; k < header.size(); ++k) os << (k ? "," : "") << esc(header[k]);
      os << "\n";
      for (const auto& r : rows) {
        for (size_t k = 0; k < r.size(); ++k) os << (k ? "," : "") << esc(r[k]);
        os << "\n";
      }
    }
    return os.str();
  }
};

std::string micro_str(const ExampleBundle& b, int stratum, const MicroKClass& cls) {
  if (cls.zero()) return "0";
  const StratumData& st = b.strata[stratum];
  std::ostringstream os;
  bool first = true;
  for (const auto& t : cls.terms) {
    if (!first) os << " + ";
    first = false;
    if (t.coeff != 1) os << t.coeff << "*";
    std::string nm = "?";
    for (const auto& [name, chi] : st.mic_systems)
      if (chi.exps == t.chi.exps) nm = name;
    os << nm << "_{O_" << st.name << "}";
    if (t.shift) os << "[" << t.shift << "]";
  }
  return os.str();
}

}  // namespace

std::vector<std::string> known_table_ids(const ExampleBundle& b) {
  std::vector<std::string> out;
  for (const char* k : {"orbits", "Evs", "NEvs", "AS", "fourier", "mrep", "mgeo", "ABV", "twist"})
    out.push_back(std::string(k) + "-" + b.display_name);
  return out;
}

std::string report_table(const ExampleBundle& b, const std::string& table_id, ReportFormat fmt) {
  auto dash = table_id.find('-');
  if (dash == std::string::npos || table_id.substr(dash + 1) != b.display_name)
    throw std::runtime_error("unknown table id '" + table_id + "' (try: " +
                             [&] {
                               std::string s;
                               for (const auto& k : known_table_ids(b)) s += k + " ";
                               return s;
                             }() +
                             ")");
  std::string kind = table_id.substr(0, dash);
  Table t;

  if (kind == "orbits") {
    t.header = {"orbit", "dim", "dual", "eccentricity", "A_C", "A_mic", "local systems"};
    for (const auto& st : b.strata) {
      std::string groups, micg, ls;
      auto gstr = [](const FiniteAbelianGroup& g) {
        if (g.trivial()) return std::string("1");
        std::string s;
        for (size_t k = 0; k < g.orders.size(); ++k)
          s += (k ? "x" : "") + std::string("Z/") + std::to_string(g.orders[k]);
        return s;
      };
      for (const auto& [name, chi] : st.local_systems) {
        (void)chi;
        if (!ls.empty()) ls += " ";
        ls += name;
      }
      t.rows.push_back({st.name, std::to_string(st.declared_dim), st.dual_name,
                        std::to_string(st.declared_ecc), gstr(st.a_group), gstr(st.a_mic), ls});
    }
  } else if (kind == "Evs" || kind == "NEvs") {
    t.header = {"P"};
    for (const auto& st : b.strata) t.header.push_back(kind + "_" + st.name);
    for (size_t s = 0; s < b.simples.size(); ++s) {
      std::vector<std::string> row = {b.simples[s].name};
      for (size_t c = 0; c < b.strata.size(); ++c) {
        MicroKClass cls = kind == "Evs" ? b.evs_entry(static_cast<int>(s), static_cast<int>(c))
                                        : b.nevs_entry(static_cast<int>(s), static_cast<int>(c));
        row.push_back(cls.zero() ? "0" : micro_str(b, static_cast<int>(c), cls));
      }
      t.rows.push_back(std::move(row));
    }
  } else if (kind == "AS") {
    t.header = {"stratum", "packet sheaves", "coronal sheaves"};
    for (size_t c = 0; c < b.strata.size(); ++c) {
      ArthurSheaf as = arthur_sheaf(b, static_cast<int>(c));
      auto part = [&](const std::map<int, long>& m) {
        std::string s;
        for (const auto& [idx, r] : m) {
          if (!s.empty()) s += " + ";
          if (r != 1) s += std::to_string(r) + "*";
          s += b.simples[idx].name;
        }
        return s;
      };
      t.rows.push_back({b.strata[c].name, part(as.packet), part(as.coronal)});
    }
  } else if (kind == "fourier") {
    t.header = {"P", "Ft P", "hat P"};
    for (const auto& sh : b.simples) {
      const std::string& hp = b.hat_simple.at(sh.name);
      int hidx = b.find_simple(hp);
      // Ft P lives on V*; name it through the transposed support of hat P.
      std::string ft = "IC(" + b.simples[hidx].local_system + "_{" +
                       b.strata[b.simples[hidx].stratum].name + "^t})";
      t.rows.push_back({sh.name, ft, hp});
    }
  } else if (kind == "mrep" || kind == "mgeo") {
    const auto& m = kind == "mrep" ? b.m_rep : b.m_geo_prime;
    t.header = {kind};
    for (const auto& sh : b.simples) t.header.push_back(sh.name);
    for (size_t i = 0; i < b.simples.size(); ++i) {
      std::vector<std::string> row = {kind == "mrep" ? "M(" + b.simple_rep[i] + ")"
                                                     : b.simples[i].name + "#"};
      for (size_t j = 0; j < b.simples.size(); ++j) row.push_back(std::to_string(m[i][j]));
      t.rows.push_back(std::move(row));
    }
  } else if (kind == "ABV") {
    t.header = {"stratum", "packet representations", "coronal representations"};
    for (size_t c = 0; c < b.strata.size(); ++c) {
      std::string pk, cor;
      for (size_t s = 0; s < b.simples.size(); ++s) {
        if (b.evs[s][c].zero()) continue;
        std::string entry = "(" + b.simple_rep[s] + "," + b.simple_form[s] + ")";
        std::string& dst = b.simples[s].stratum == static_cast<int>(c) ? pk : cor;
        if (!dst.empty()) dst += " ";
        dst += entry;
      }
      t.rows.push_back({b.strata[c].name, pk, cor});
    }
  } else if (kind == "twist") {
    t.header = {"stratum", "T_C"};
    for (size_t c = 0; c < b.strata.size(); ++c) {
      Character tw = b.twist_char(static_cast<int>(c));
      std::string nm = "?";
      for (const auto& [name, chi] : b.strata[c].mic_systems)
        if (chi.exps == tw.exps) nm = name;
      t.rows.push_back({b.strata[c].name, nm});
    }
  } else {
    throw std::runtime_error("unknown table kind '" + kind + "'");
  }
  return t.emit(fmt);
}

}  // namespace voganish
