/*
   Copyright 2026 The slicereg authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef SLICEREG_ERROR_HPP
#define SLICEREG_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace slicereg {

enum class errc {
    division_by_zero,
    degenerate_frame,
    zero_function,
    invalid_sphere,
    inconsistent_sphere,
    root_finding_failed,
    isolated_nonreal_zeros,
    not_representable,
    formula_mismatch,
    precondition_violated,
    structure_not_found,
    invalid_degree,
    syntax_error,
    schema_error,
};

inline const char* errc_name(errc c) {
    switch (c) {
        case errc::division_by_zero:       return "division-by-zero";
        case errc::degenerate_frame:       return "degenerate-frame";
        case errc::zero_function:          return "zero-function";
        case errc::invalid_sphere:         return "invalid-sphere";
        case errc::inconsistent_sphere:    return "inconsistent-sphere";
        case errc::root_finding_failed:    return "root-finding-failed";
        case errc::isolated_nonreal_zeros: return "isolated-nonreal-zeros";
        case errc::not_representable:      return "not-representable";
        case errc::formula_mismatch:       return "formula-mismatch";
        case errc::precondition_violated:  return "precondition-violated";
        case errc::structure_not_found:    return "structure-not-found";
        case errc::invalid_degree:         return "invalid-degree";
        case errc::syntax_error:           return "syntax-error";
        case errc::schema_error:           return "schema-error";
    }
    return "unknown";
}

/// Library error carrying a machine-readable kind; syntax errors also carry
/// the byte offset of the offending character.
class error : public std::runtime_error {
  public:
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

    error(errc code, const std::string& what, std::size_t offset = npos)
        : std::runtime_error(what), code_(code), offset_(offset) {}

    errc code() const { return code_; }
    std::size_t offset() const { return offset_; }

  private:
    errc code_;
    std::size_t offset_;
};

} // namespace slicereg

#endif
