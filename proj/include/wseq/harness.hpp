#pragma once

#include <string>
#include <vector>

#include "wseq/common.hpp"
#include "wseq/conditions.hpp"
#include "wseq/families.hpp"

namespace wseq {

struct SuiteCell {
    std::string type;  // roumieu | beurling
    std::string id;    // condition id or index condition label
    Verdict verdict = Verdict::Inconclusive;
    json detail = json::object();
};

struct SuiteClass {
    std::string name;
    std::vector<std::size_t> members;  // positions in cells
    Verdict agreement = Verdict::Inconclusive;
};

struct SuiteReport {
    std::string suite;
    json subject;
    std::vector<SuiteCell> cells;
    std::vector<SuiteClass> classes;
    // true iff every class agrees; false on any hard disagreement; otherwise inconclusive
    Verdict agreement = Verdict::Inconclusive;
    json config;
    std::string timestamp;
};

json to_json(const SuiteReport& r);

// Suites: lemma31, thm32, prop41, thm39, thm44, thm52, thm56, each optionally suffixed
// with -I / -II (or -roumieu / -beurling); without a suffix both types run.
SuiteReport run_suite(const std::string& suite, const FamilyDescriptor& subject, const Config& cfg = default_config());
std::vector<std::string> suite_ids();

// Agreement of a set of verdicts: any true/false mix is a disagreement.
Verdict agreement_of(const std::vector<Verdict>& vs);

}  // namespace wseq
