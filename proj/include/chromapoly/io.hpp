#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "chromapoly/hypergraph.hpp"

namespace chromapoly {

class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

/// Text format: the first significant line holds the vertex count n; every
/// further non-empty line not starting with '#' lists one edge as
/// whitespace-separated 1-based vertex indices. Edge order in the file is the
/// default edge ordering.
Hypergraph parse_hypergraph(std::string_view text);

std::string to_text(const Hypergraph& h);

}  // namespace chromapoly
