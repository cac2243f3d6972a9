#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include <json.hpp>

#include "qtate/massey.hpp"

namespace qtate {

using Json = nlohmann::ordered_json;

struct RunConfig {
    int t = 2;
    Field field = Field::GF2;
    int window = 2;       // s-exponent window for cocycle checks
    int max_degree = 7;   // degree bound for the scalar-triple enumeration
    std::uint64_t seed = 1;
    int max_t = 16;
    int samples = 20;     // random presentations for the realizability sweep
};

struct Check {
    std::string name;
    std::string ref;      // stable cross-reference slug
    bool pass = false;
    bool info_only = false;  // reported, not asserted
    Json data;
};

// named suites behind the CLI subcommands
std::vector<Check> check_group(const RunConfig& rc);
std::vector<Check> check_resolution(const RunConfig& rc);
std::vector<Check> check_homotopies(const RunConfig& rc);
std::vector<Check> check_f2_suite(const RunConfig& rc);
std::vector<Check> check_gamma(const RunConfig& rc, MKind kind = MKind::M);
std::vector<Check> check_enumeration(const RunConfig& rc);
std::vector<Check> check_module(const RunConfig& rc, const LambdaMatrix& A,
                                MKind kind = MKind::M);

Json dump_m_table(const RunConfig& rc);

// seeded random homogeneous presentation, entry degrees in [1,3], size <= 4x4
LambdaMatrix sample_presentation(Variant var, std::mt19937_64& rng);

LambdaMatrix matrix_from_json(Variant var, const Json& j);
Json matrix_to_json(const LambdaMatrix& M);

/* The acceptance suite: one entry per criterion, run at the pinned
 * configurations.  reproduce-paper renders exactly this. */
struct CriterionResult {
    int number = 0;
    std::string title;
    bool pass = false;
    std::vector<Check> details;
};

std::vector<CriterionResult> run_acceptance_suite();

Json report_json(const RunConfig& rc, const std::string& command,
                 const std::vector<Check>& checks);
Json acceptance_report_json(const std::vector<CriterionResult>& results);

}  // namespace qtate
