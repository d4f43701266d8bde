#include "collapse/io.hpp"

namespace collapse::io {

namespace {

std::vector<int> images_from(const Json& j, const char* key, int n) {
  if (!j.contains(key)) throw Error(std::string("automaton JSON lacks \"") + key + "\"");
  const Json& arr = j.at(key);
  if (!arr.is_array()) throw Error(std::string("\"") + key + "\" must be an array");
  if (arr.size() != static_cast<std::size_t>(n)) {
    throw Error(std::string("\"") + key + "\" has " + std::to_string(arr.size()) + " entries, expected " +
                std::to_string(n));
  }
  std::vector<int> out;
  for (const Json& v : arr) {
    if (!v.is_number_integer()) throw Error(std::string("\"") + key + "\" entries must be integers");
    const auto q = v.get<long long>();
    if (q < 0 || q >= n) throw Error(std::string("\"") + key + "\" entry " + std::to_string(q) + " outside 0.." + std::to_string(n - 1));
    out.push_back(static_cast<int>(q));
  }
  return out;
}

Json words_json(const std::vector<Word>& ws) {
  Json out = Json::array();
  for (const Word& w : ws) out.push_back(w.str());
  return out;
}

}  // namespace

Json to_json(const Automaton& A) {
  Json j;
  j["n"] = A.size();
  j["a"] = A.a.images();
  j["b"] = A.b.images();
  return j;
}

Automaton automaton_from_json(const Json& j) {
  if (!j.is_object()) throw Error("automaton JSON must be an object");
  if (!j.contains("n") || !j.at("n").is_number_integer()) throw Error("automaton JSON needs an integer \"n\"");
  const auto n = j.at("n").get<long long>();
  if (n < 1 || n > kMaxStates) throw Error("n = " + std::to_string(n) + " outside 1.." + std::to_string(kMaxStates));
  const int size = static_cast<int>(n);
  const std::vector<int> a = images_from(j, "a", size);
  const std::vector<int> b = images_from(j, "b", size);
  return Automaton(Transformation(std::span<const int>(a)), Transformation(std::span<const int>(b)));
}

Automaton parse_automaton(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(std::string("malformed JSON: ") + e.what());
  }
  return automaton_from_json(j);
}

std::string dump_automaton(const Automaton& A) { return to_json(A).dump(); }

Json to_json(const LetterClass& c) {
  Json j;
  j["type"] = to_string(c.type);
  Json w = Json::array();
  for (int q : c.witness) {
    if (q >= 0) w.push_back(q);
  }
  j["witness"] = w;
  return j;
}

Json to_json(const AutomatonClass& c) {
  Json j;
  j["label"] = c.label();
  j["swapped"] = c.swapped;
  // Classes of the input letters, not of the normalized ones.
  j["a"] = to_json(c.swapped ? c.second : c.first);
  j["b"] = to_json(c.swapped ? c.first : c.second);
  return j;
}

Json to_json(const CompressReport& r, int k) {
  Json j;
  j["k"] = k;
  j["compressible"] = r.compressible;
  if (r.compressible) {
    j["length"] = r.length;
    j["shortest_word"] = r.shortest_word->str();
    j["proper"] = r.proper;
    j["verdict"] = to_string(r.proper ? Verdict::Proper : Verdict::Improper);
  } else {
    j["shortest_word"] = nullptr;
    j["verdict"] = to_string(Verdict::NotCompressible);
  }
  return j;
}

Json to_json(const FamilyVerdict& v) {
  Json j;
  j["family"] = v.family.label();
  j["verdict"] = to_string(v.verdict);
  j["branch"] = v.matched_branch;
  if (v.verdict == Verdict::Proper) {
    j["menu_kind"] = to_string(v.menu_kind);
    j["menu"] = words_json(v.word_menu);
  }
  return j;
}

Json to_json(const words::CertificateReport& r) {
  Json j;
  j["certified"] = r.is_certified;
  j["missing_requirements"] = r.missing_requirements;
  return j;
}

Json to_json(const ScsSolution& s) {
  Json j;
  j["length"] = s.length;
  j["count"] = s.words.size();
  j["words"] = words_json(s.words);
  return j;
}

Json to_json(const SweepReport& r) {
  Json j;
  j["kind"] = r.kind;
  j["n"] = r.n;
  if (r.kind == "word" || r.kind == "pair") j["k"] = r.k;
  if (!r.word.empty()) j["word"] = r.word;
  if (!r.families.empty()) j["families"] = r.families;
  j["reduced"] = r.reduced;
  j["examined"] = r.examined;
  j["compressible"] = r.compressible;
  if (!r.verdicts.empty()) {
    Json v = Json::object();
    for (const auto& [label, counts] : r.verdicts) {
      v[label] = {{"NotCompressible", counts[0]}, {"Improper", counts[1]}, {"Proper", counts[2]}};
    }
    j["verdicts"] = v;
  }
  if (!r.branch_counts.empty()) {
    j["branch_counts"] = r.branch_counts;
    j["unfired_branches"] = r.unfired_branches();
  }
  if (!r.counters.empty()) j["counters"] = r.counters;
  j["failure_count"] = r.failure_count;
  Json fs = Json::array();
  for (const Finding& f : r.failures) {
    Json e;
    e["automaton"] = to_json(f.automaton);
    e["expected"] = f.expected;
    e["got"] = f.got;
    if (!f.branch.empty()) e["branch"] = f.branch;
    fs.push_back(e);
  }
  j["failures"] = fs;
  if (r.kind == "characterization") j["menu_failures"] = r.menu_failures;
  j["passed"] = r.passed();
  j["elapsed_seconds"] = r.elapsed_seconds;
  return j;
}

}  // namespace collapse::io
