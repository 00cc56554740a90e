#include "phit/io.hpp"

#include <sstream>
#include <vector>

#include <json.hpp>

namespace phit {
namespace {

using ordered_json = nlohmann::ordered_json;

// (m desc, n desc) term order shared by every format
std::vector<std::pair<uint32_t, uint32_t>> ordered_keys(const ModularPoly& phi) {
  std::vector<std::pair<uint32_t, uint32_t>> keys;
  keys.reserve(phi.terms.size());
  for (const auto& [key, c] : phi.terms) keys.push_back(key);
  std::sort(keys.begin(), keys.end(), [](const auto& a, const auto& b) {
    if (a.first != b.first) return a.first > b.first;
    return a.second > b.second;
  });
  return keys;
}

std::string term_str(const ModularPoly& phi, uint32_t m, uint32_t n, bool cas) {
  const FqPoly& c = *phi.find(m, n);
  std::string s;
  bool coeff_needed = !c.is_one() || (m == 0 && n == 0);
  if (coeff_needed) s += "(" + c.str() + ")";
  auto add_var = [&](const char* v, uint32_t exp) {
    if (exp == 0) return;
    if (!s.empty()) s += cas ? "*" : "*";
    s += v;
    if (exp > 1) s += "^" + std::to_string(exp);
  };
  add_var("X", m);
  add_var("Y", n);
  return s;
}

}  // namespace

ExportFormat parse_format(const std::string& name) {
  if (name == "text") return ExportFormat::text;
  if (name == "json") return ExportFormat::json;
  if (name == "cas") return ExportFormat::cas;
  throw std::invalid_argument("unknown format: " + name);
}

std::string export_phi(const ModularPoly& phi, ExportFormat fmt) {
  const auto keys = ordered_keys(phi);
  switch (fmt) {
    case ExportFormat::json: {
      ordered_json root;
      root["q"] = phi.q;
      root["p"] = phi.k->p;
      root["e"] = phi.k->e;
      root["modulus"] = phi.k->modulus;
      ordered_json terms = ordered_json::array();
      for (const auto& [m, n] : keys) {
        const FqPoly& c = *phi.find(m, n);
        ordered_json t;
        t["m"] = m;
        t["n"] = n;
        ordered_json coeffs = ordered_json::array();
        for (int i = 0; i <= c.deg(); ++i) coeffs.push_back(c.coeff(size_t(i)).coeffs());
        t["T"] = std::move(coeffs);
        terms.push_back(std::move(t));
      }
      root["terms"] = std::move(terms);
      return root.dump();
    }
    case ExportFormat::text: {
      std::ostringstream os;
      os << "Phi_T(X,Y) over " << phi.k->name() << "[T], q = " << phi.q << "\n";
      bool first = true;
      for (const auto& [m, n] : keys) {
        os << (first ? "  " : "  + ") << term_str(phi, m, n, false) << "\n";
        first = false;
      }
      return os.str();
    }
    case ExportFormat::cas: {
      std::ostringstream os;
      os << "# " << phi.k->name() << " = GF(" << phi.k->p << ")[x]/("
         << phi.k->modulus_str() << ")\n";
      os << "Phi := ";
      bool first = true;
      for (const auto& [m, n] : keys) {
        if (!first) os << " + ";
        os << term_str(phi, m, n, true);
        first = false;
      }
      os << " ;\n";
      return os.str();
    }
  }
  throw std::logic_error("unreachable");
}

ModularPoly import_phi_json(const std::string& text) {
  nlohmann::json root = nlohmann::json::parse(text);
  uint64_t q = root.at("q").get<uint64_t>();
  uint32_t p = root.at("p").get<uint32_t>();
  uint32_t e = root.at("e").get<uint32_t>();
  Field fq = make_field(p, e);
  if (fq->q != q) throw std::invalid_argument("q does not match p^e");
  std::vector<uint32_t> modulus = root.at("modulus").get<std::vector<uint32_t>>();
  if (modulus != fq->modulus) throw std::invalid_argument("modulus mismatch");

  ModularPoly phi;
  phi.k = fq;
  phi.q = q;
  for (const auto& t : root.at("terms")) {
    uint32_t m = t.at("m").get<uint32_t>();
    uint32_t n = t.at("n").get<uint32_t>();
    if (m > q + 1 || n > q + 1) throw std::invalid_argument("exponent out of range");
    FqPoly c(fq, 'T');
    const auto& coeffs = t.at("T");
    size_t i = 0;
    for (const auto& vec : coeffs) {
      std::vector<uint32_t> v = vec.get<std::vector<uint32_t>>();
      if (v.size() != e) throw std::invalid_argument("bad coefficient length");
      for (uint32_t x : v)
        if (x >= p) throw std::invalid_argument("coefficient out of range");
      c.set_coeff(i++, FqElem(fq, std::move(v)));
    }
    if (phi.find(m, n)) throw std::invalid_argument("duplicate term");
    phi.set(m, n, std::move(c));
  }
  return phi;
}

}  // namespace phit
