#pragma once

#include <stdexcept>
#include <string>

namespace mcg {

// Error categories map 1:1 onto CLI exit codes / C API status values.
// input_error:          malformed documents, violated preconditions   (2)
// not_applicable_error: structurally infeasible or undefined request  (3)
// budget_error:         an enumeration budget was exceeded            (4)
// alarm_error:          an internal consistency guarantee broke; this
//                       must never fire on valid inputs               (5)

class input_error : public std::runtime_error {
public:
  explicit input_error(const std::string& what) : std::runtime_error(what) {}
};

class not_applicable_error : public std::runtime_error {
public:
  explicit not_applicable_error(const std::string& what) : std::runtime_error(what) {}
};

class budget_error : public std::runtime_error {
public:
  explicit budget_error(const std::string& what) : std::runtime_error(what) {}
};

class alarm_error : public std::runtime_error {
public:
  explicit alarm_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace mcg
