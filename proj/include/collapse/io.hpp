#pragma once

// JSON forms of automata and of every report type.
//
// The canonical automaton form is {"n":N,"a":[...],"b":[...]} with keys in
// that order and no whitespace; parsing and dumping it is the identity.

#include <string>

#include <json.hpp>

#include "collapse/characterize.hpp"
#include "collapse/msa.hpp"
#include "collapse/scs.hpp"
#include "collapse/sweep.hpp"
#include "collapse/words.hpp"

namespace collapse::io {

using Json = nlohmann::ordered_json;

Json to_json(const Automaton& A);
/// Throws Error on missing keys, wrong types, n outside 1..16, arrays of the
/// wrong length or images outside 0..n-1.
Automaton automaton_from_json(const Json& j);
Automaton parse_automaton(const std::string& text);
/// Canonical compact form.
std::string dump_automaton(const Automaton& A);

Json to_json(const LetterClass& c);
Json to_json(const AutomatonClass& c);
Json to_json(const CompressReport& r, int k);
Json to_json(const FamilyVerdict& v);
Json to_json(const words::CertificateReport& r);
Json to_json(const ScsSolution& s);
Json to_json(const SweepReport& r);

}  // namespace collapse::io
