#pragma once

/**
 * @file fixtures.hpp
 * @brief The bundled instances. Each one can be built programmatically or
 * loaded from its shipped JSON document; the two must agree.
 */

#include <string>
#include <vector>

#include "grado/io.hpp"

namespace grado {

std::vector<std::string> fixture_names();
/// Throws InputError for an unknown name.
Instance build_fixture(const std::string& name);

std::string fixture_dir();
std::string fixture_path(const std::string& name);
std::string expected_path(const std::string& name);
Instance load_fixture(const std::string& name);
/// Raw bytes of the shipped document.
std::string fixture_bytes(const std::string& name);

/// Serialized form written to the shipped documents.
std::string dump_document(const Json& j);

}  // namespace grado
