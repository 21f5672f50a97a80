#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

#include "pmclp/bnb.hpp"
#include "pmclp/model.hpp"

namespace pmclp {

// Malformed file contents. The message names the line and, for schema
// problems, the offending field.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string serialize_instance(const Instance& instance);
Instance parse_instance(std::string_view text);

std::string serialize_solution(const SolveResult& result);
SolveResult parse_solution(std::string_view text);

// Throws IoError unless `solution` has one placement per zone, every scale is
// allowed for its zone and the stored reward matches the recomputed one.
void validate_solution(const Instance& instance, const Solution& solution,
                       double tol = 1e-9);

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view text);

}  // namespace pmclp
