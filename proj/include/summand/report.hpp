#pragma once

#include <json.hpp>
#include <string>

#include "summand/decompose.hpp"
#include "summand/instance.hpp"
#include "summand/projcover.hpp"

namespace summand {

// Reports are nlohmann::ordered_json so that equal inputs and seeds render
// byte-identically. schema_version marks the layout.
using OrderedJson = nlohmann::ordered_json;

inline constexpr int kReportSchemaVersion = 1;

struct ReportOptions {
    std::uint64_t seed = 0;
    bool witnesses = false;
};

OrderedJson matrix_json(const Matrix& m);

OrderedJson decompose_report(const Instance& inst,
                             const std::string& module_name,
                             const Decomposition& dec,
                             const ReportOptions& opt);

OrderedJson cover_report(const Instance& inst, const std::string& module_name,
                         const CoverResult& cover, const ReportOptions& opt);

OrderedJson hom_report(const Instance& inst, const std::string& source,
                       const std::string& target, const HomSpace& hom,
                       const ReportOptions& opt);

OrderedJson end_report(const Instance& inst, const std::string& module_name,
                       const EndAlgebra& end, const ReportOptions& opt);

OrderedJson radhom_report(const Instance& inst, const std::string& source,
                          const std::string& target, const RadHomSpace& rad,
                          const ReportOptions& opt);

OrderedJson isiso_report(const Instance& inst, const std::string& left,
                         const std::string& right,
                         const std::optional<Matrix>& witness,
                         const ReportOptions& opt);

struct VerifyOutcome {
    OrderedJson report;
    bool all_pass = false;
};

// suite: all | radical | covers | uniqueness | fitting
VerifyOutcome run_verify(const Instance& inst, const std::string& suite,
                         std::uint64_t seed);

// human-readable rendering of any report
std::string render_text(const OrderedJson& report);

}  // namespace summand
