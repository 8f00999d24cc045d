#include "agss/report.hpp"

#include <map>
#include <sstream>

#include "agss/matroid.hpp"

namespace agss::report {

namespace {

json index_list(const std::vector<gf::FieldElement>& v) {
  json a = json::array();
  for (const auto& e : v) a.push_back(e.index());
  return a;
}

json set_family(const std::vector<std::vector<size_t>>& fam) {
  json a = json::array();
  for (const auto& s : fam) a.push_back(s);
  return a;
}

json label_family(const std::vector<std::vector<std::string>>& fam) {
  json a = json::array();
  for (const auto& s : fam) a.push_back(s);
  return a;
}

json size_histogram(const std::vector<std::vector<size_t>>& fam) {
  std::map<size_t, size_t> h;
  for (const auto& s : fam) ++h[s.size()];
  json o = json::object();
  for (const auto& [size, count] : h) o[std::to_string(size)] = count;
  return o;
}

bool all_scalar(const json& a) {
  for (const auto& e : a)
    if (e.is_structured()) return false;
  return true;
}

void render(const json& j, std::ostringstream& os, int depth) {
  const std::string pad(2 * depth, ' ');
  if (j.is_object()) {
    for (const auto& [key, value] : j.items()) {
      if (!value.is_structured() || (value.is_array() && all_scalar(value))) {
        os << pad << key << ": " << value.dump() << "\n";
      } else {
        os << pad << key << ":\n";
        render(value, os, depth + 1);
      }
    }
  } else if (j.is_array()) {
    for (const auto& e : j) {
      if (!e.is_structured() || (e.is_array() && all_scalar(e))) {
        os << pad << "- " << e.dump() << "\n";
      } else {
        os << pad << "-\n";
        render(e, os, depth + 1);
      }
    }
  } else {
    os << pad << j.dump() << "\n";
  }
}

}  // namespace

json analysis_report(const config::SchemeConfig& cfg,
                     const config::BuiltScheme& built) {
  const lsss::Scheme& s = built.scheme;
  const gf::Field& f = s.field();
  json j;
  j["config"] = json::parse(config::serialize_config(cfg));

  j["field"]["order"] = f.order();
  j["field"]["characteristic"] = cfg.field.p;
  j["field"]["degree"] = cfg.field.k;

  j["curve"]["family"] = built.family;
  j["curve"]["genus"] = built.genus;
  j["curve"]["rational_points"] = built.rational_point_count;
  j["curve"]["group"] = built.group_description.empty()
                            ? json(nullptr)
                            : json(built.group_description);

  j["code"]["length"] = s.sharing_code().length();
  j["code"]["dimension"] = s.sharing_code().dimension();
  j["code"]["dual_dimension"] =
      s.sharing_code().length() - s.sharing_code().dimension();
  j["code"]["variant"] =
      s.variant() ? json(lsss::to_string(*s.variant())) : json(nullptr);
  j["code"]["participants"] = s.participants();

  auto as = s.minimal_access_structure(cfg.codeword_budget, cfg.subset_budget);
  j["access_structure"]["minimal_qualified_count"] = as.minimal_qualified().size();
  j["access_structure"]["minimal_qualified_sizes"] =
      size_histogram(as.minimal_qualified());
  j["access_structure"]["minimal_qualified"] = set_family(as.minimal_qualified());
  j["access_structure"]["maximal_unqualified_count"] =
      as.maximal_unqualified().size();
  j["access_structure"]["maximal_unqualified"] =
      set_family(as.maximal_unqualified());
  auto t = as.threshold_value();
  j["access_structure"]["threshold"] = t ? json(*t) : json(nullptr);
  j["access_structure"]["q2"] = as.is_Q2();
  j["access_structure"]["q3"] = as.is_Q3();

  auto cheat = s.cheat_parameters(cfg.codeword_budget, cfg.subset_budget);
  j["cheat"]["d_min"] = cheat.d_min;
  j["cheat"]["d_cheat"] = cheat.d_cheat;
  j["cheat"]["max_unqualified_size"] = cheat.max_unqualified_size;
  j["cheat"]["window"] =
      cheat.window ? json({cheat.window->first, cheat.window->second})
                   : json(nullptr);
  j["cheat"]["window_ok"] = cheat.window_ok ? json(*cheat.window_ok) : json(nullptr);

  auto witness = s.multiplicativity();
  j["multiplicativity"]["witness"] =
      witness ? index_list(*witness) : json(nullptr);
  auto strong = s.strong_multiplicativity(cfg.codeword_budget, cfg.subset_budget);
  if (strong) {
    json arr = json::array();
    for (const auto& [set, coeffs] : *strong) {
      json e;
      e["set"] = set;
      e["coefficients"] = index_list(coeffs);
      arr.push_back(e);
    }
    j["multiplicativity"]["strong"] = arr;
  } else {
    j["multiplicativity"]["strong"] = nullptr;
  }

  const long n = s.sharing_code().length();
  const long k = s.sharing_code().dimension();
  if (n <= 64 && code::power_within(f.order(), k, cfg.codeword_budget)) {
    auto circuits =
        matroid::circuits_from_code(s.sharing_code(), cfg.codeword_budget);
    j["matroid"]["circuit_count"] = circuits.circuits.size();
    j["matroid"]["size_histogram"] = size_histogram(circuits.circuits);
    j["matroid"]["circuits"] = set_family(circuits.circuits);
    if (code::power_within(f.order(), n - k, cfg.codeword_budget)) {
      auto sd =
          matroid::matroid_self_dual(s.sharing_code(), cfg.codeword_budget);
      j["matroid"]["self_dual"] = sd.self_dual;
    } else {
      j["matroid"]["self_dual"] = nullptr;
    }
  } else {
    j["matroid"]["skipped"] = "codeword budget";
  }
  return j;
}

json discrepancy_report(const std::vector<reference::Comparison>& comparisons) {
  json arr = json::array();
  size_t fully = 0;
  for (const auto& c : comparisons) {
    json e;
    e["instance"] = c.instance;
    e["quantity"] = c.quantity;
    e["paper_total"] = c.paper_total;
    e["derived_total"] = c.derived_total;
    e["matched_count"] = c.matched.size();
    e["paper_only_count"] = c.paper_only.size();
    e["derived_only_count"] = c.derived_only.size();
    e["matched"] = label_family(c.matched);
    e["paper_only"] = label_family(c.paper_only);
    e["derived_only"] = label_family(c.derived_only);
    e["notes"] = c.notes;
    if (c.paper_only.empty() && c.derived_only.empty()) ++fully;
    arr.push_back(e);
  }
  json j;
  j["instances"] = arr;
  j["summary"]["instances"] = comparisons.size();
  j["summary"]["fully_matched"] = fully;
  return j;
}

json transcript_line(const mpc::Message& m) {
  json j;
  j["round"] = m.round;
  j["from"] = m.from;
  j["to"] = m.to;
  j["tag"] = m.tag;
  json payload = json::array();
  for (const auto& e : m.payload) payload.push_back(e.index());
  j["payload"] = payload;
  return j;
}

std::string transcript_jsonl(const std::vector<mpc::Message>& log) {
  std::ostringstream os;
  for (const auto& m : log) os << transcript_line(m).dump() << "\n";
  return os.str();
}

std::string render_text(const json& j) {
  std::ostringstream os;
  render(j, os, 0);
  return os.str();
}

}  // namespace agss::report
