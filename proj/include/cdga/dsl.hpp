#pragma once
#include <optional>
#include <string>
#include <vector>

#include "cdga/cdga.hpp"

namespace cdga {

enum class Severity { error, warning };

struct Diagnostic {
    Severity severity = Severity::error;
    std::string message;
    int line = 0;   // 1-based
    int column = 0; // 1-based
    std::string excerpt; // the offending source line
};

std::string format_diagnostic(const Diagnostic& d);

// Result of parsing a full algebra description. `cdga` is set only when
// there were no errors (warnings alone do not block).
struct ParseResult {
    std::optional<Cdga> cdga;
    std::string name; // from the `algebra <name> { ... }` header
    std::vector<Diagnostic> diagnostics;
    // True when the text itself was syntactically and structurally sound, so
    // any remaining diagnostics concern the differential (homogeneity, d o d,
    // Jacobi) rather than the input format.
    bool well_formed = false;
    bool ok() const;
};

// Text format:
//
//   algebra <name> {
//     generators: x1:1, x2:1, y:2
//     d y = x1*x2
//   }
//
// or, for a Lie algebra given by brackets on degree-1 generators,
//
//   algebra <name> {
//     generators: x1:1, x2:1, x3:1
//     [x1, x2] = x3
//   }
//
// The two statement kinds cannot be mixed. Whitespace and newlines are
// interchangeable, `#` starts a line comment, and coefficients are
// rationals like 2, -1, 3/4. Omitted generators get d = 0; the bracket
// form builds d x_k = -sum_{i<j} c_ij^k x_i x_j and checks the Jacobi
// identity first.
ParseResult parse_algebra(const std::string& source);

struct ElementParse {
    std::optional<Element> element;
    std::vector<Diagnostic> diagnostics;
    bool ok() const { return element.has_value(); }
};

// Parses one element expression (sums of rational multiples of generator
// products, with parentheses) over an existing algebra.
ElementParse parse_element(const AlgebraPtr& alg, const std::string& text);

// Source text in the format above for each catalog entry; nullopt for
// unknown names. parse_algebra on this text reproduces catalog(name).
std::optional<std::string> catalog_source(const std::string& name);

} // namespace cdga
