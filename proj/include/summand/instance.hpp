#pragma once

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "summand/algebra.hpp"
#include "summand/module.hpp"

namespace summand {

// A parsed instance file: one prime field, one algebra (structure constants
// or quiver presentation), named modules. All integers are reduced mod p on
// load; malformed input raises ParseError with a JSON-path anchor.
struct Instance {
    Fp field;
    std::shared_ptr<const Algebra> algebra;
    std::vector<std::string> basis_labels;  // nonempty for quiver algebras
    std::vector<std::pair<std::string, Module>> modules;  // sorted by name

    const Module* find_module(const std::string& name) const;
};

Instance load_instance(const std::string& path);
Instance parse_instance_text(const std::string& text);

}  // namespace summand
