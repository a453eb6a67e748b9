#pragma once

#include <filesystem>
#include <string>

#ifndef RISKCHAIN_SOURCE_ROOT
#define RISKCHAIN_SOURCE_ROOT "."
#endif

namespace testpaths {

inline std::filesystem::path source_root() { return {RISKCHAIN_SOURCE_ROOT}; }

inline std::filesystem::path fixture(const std::string& rel) {
    return source_root() / "tests" / "fixtures" / rel;
}

} // namespace testpaths
