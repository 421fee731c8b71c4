#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "sgi/signed_graph.hpp"

namespace sgi {

/// Syntax or semantic error in `.sg` input, with 1-based position.
class ParseError : public std::runtime_error {
  public:
    ParseError(int line, int column, const std::string& message);
    int line() const { return line_; }
    int column() const { return column_; }

  private:
    int line_;
    int column_;
};

/// The `.sg` text format:
///   line 1:        `n m`
///   lines 2..m+1:  `u v s` with 0 <= u < v < n and s one of `+`, `-`
/// Blank lines and lines starting with `#` are ignored. Duplicate or reversed
/// pairs are rejected.
SignedGraph parse_sg(std::string_view text);

/// Reads a file and parses it; std::runtime_error on I/O failure.
SignedGraph load_sg(const std::string& path);

/// Canonical `.sg` text: header, then edges sorted by (u, v).
std::string to_sg(const SignedGraph& g);

/// Single-line `.sg` rendering used inside machine-readable records: the file
/// lines joined with `;`, fields within a line joined with `,`.
std::string to_sg_record(const SignedGraph& g);

/// Inverse of to_sg_record; throws ParseError on malformed input.
SignedGraph parse_sg_record(std::string_view record);

}  // namespace sgi
