#include <sstream>

#include "bub/cli.hpp"
#include "json.hpp"

namespace bub::cli {

using nlohmann::ordered_json;

namespace {

constexpr int kFormatVersion = 1;

std::string mode_text(const BoundReport& r) {
  std::string s = to_string(r.mode);
  if (r.prime) s += ", p=" + std::to_string(*r.prime);
  return s;
}

}  // namespace

std::string render_text(const BoundReport& r) {
  std::ostringstream os;
  os << "scenario: " << r.scenario << " (" << mode_text(r) << ")\n";
  if (r.mode == Mode::Complex) os << "convention: classes of lambda* (x) xi\n";
  os << "hypotheses:\n";
  for (const auto& h : r.hypotheses) {
    os << "  [" << (h.passed ? "pass" : "FAIL") << "] " << h.name;
    if (!h.witness.empty()) os << "  -- " << h.witness;
    os << "\n";
  }
  if (r.certificate)
    os << "certificate: " << r.certificate->element << "  (degree " << r.certificate->degree << ", "
       << to_string(r.certificate->label) << ")\n";
  if (r.bound) {
    os << r.theorem << ": j >= " << *r.bound << "\n";
  } else if (r.failure) {
    os << "bound: none (" << *r.failure << "); no conclusion from " << (r.theorem.empty() ? r.scenario : r.theorem)
       << "\n";
  } else if (r.dims.count("k") && r.scenario == "fiber-k") {
    os << r.theorem << ": k = " << r.dims.at("k") << "\n";
  } else {
    os << r.theorem << ": passed\n";
  }
  if (!r.dims.empty()) {
    os << "dims:";
    for (const auto& [k, v] : r.dims) os << " " << k << "=" << v;
    os << "\n";
  }
  for (const auto& n : r.notes) os << "note: " << n << "\n";
  if (!r.trace.empty()) {
    os << "trace:\n";
    for (const auto& [k, v] : r.trace) os << "  " << k << " = " << v << "\n";
  }
  return os.str();
}

std::string render_structured(const BoundReport& r) {
  ordered_json j;
  j["format_version"] = kFormatVersion;
  j["scenario"] = r.scenario;
  j["mode"] = to_string(r.mode);
  j["prime"] = r.prime ? ordered_json(*r.prime) : ordered_json(nullptr);
  j["theorem"] = r.theorem;
  j["hypotheses"] = ordered_json::array();
  for (const auto& h : r.hypotheses) j["hypotheses"].push_back({{"name", h.name}, {"passed", h.passed}, {"witness", h.witness}});
  if (r.certificate)
    j["certificate"] = {{"element", r.certificate->element},
                        {"degree", r.certificate->degree},
                        {"label", to_string(r.certificate->label)}};
  else
    j["certificate"] = nullptr;
  j["bound"] = r.bound ? ordered_json(*r.bound) : ordered_json(nullptr);
  j["failure"] = r.failure ? ordered_json(*r.failure) : ordered_json(nullptr);
  j["dims"] = ordered_json::object();
  for (const auto& [k, v] : r.dims) j["dims"][k] = v;
  j["notes"] = r.notes;
  j["trace"] = ordered_json::array();
  for (const auto& [k, v] : r.trace) j["trace"].push_back({{"name", k}, {"value", v}});
  return j.dump(2) + "\n";
}

BoundReport report_from_structured(std::string_view text) {
  BoundReport r;
  try {
    const auto j = ordered_json::parse(text);
    if (j.at("format_version").get<int>() != kFormatVersion)
      throw Error(ErrorKind::SyntaxError, "unsupported format_version");
    r.scenario = j.at("scenario").get<std::string>();
    const auto mode = j.at("mode").get<std::string>();
    if (mode != "real" && mode != "complex") throw Error(ErrorKind::SyntaxError, "unknown mode '" + mode + "'");
    r.mode = mode == "real" ? Mode::Real : Mode::Complex;
    if (!j.at("prime").is_null()) r.prime = j.at("prime").get<std::uint32_t>();
    r.theorem = j.at("theorem").get<std::string>();
    for (const auto& h : j.at("hypotheses"))
      r.hypotheses.push_back({h.at("name").get<std::string>(), h.at("passed").get<bool>(), h.at("witness").get<std::string>()});
    if (const auto& c = j.at("certificate"); !c.is_null()) {
      const auto label = c.at("label").get<std::string>();
      r.certificate = Certificate{c.at("element").get<std::string>(), c.at("degree").get<int>(),
                                  label == "formal" ? CertificateLabel::Formal : CertificateLabel::Exact};
    }
    if (!j.at("bound").is_null()) r.bound = j.at("bound").get<long long>();
    if (!j.at("failure").is_null()) r.failure = j.at("failure").get<std::string>();
    for (const auto& [k, v] : j.at("dims").items()) r.dims[k] = v.get<long long>();
    r.notes = j.at("notes").get<std::vector<std::string>>();
    for (const auto& t : j.at("trace")) r.trace.emplace_back(t.at("name").get<std::string>(), t.at("value").get<std::string>());
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::SyntaxError, std::string("structured report: ") + e.what());
  }
  return r;
}

}  // namespace bub::cli
