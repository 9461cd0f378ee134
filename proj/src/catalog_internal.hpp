#pragma once

#include <utility>

#include "sftkit/catalog.hpp"

namespace sftkit::detail {

std::vector<CatalogEntry> build_entries();
std::vector<std::pair<std::string, std::string>> build_reductions();  // (id, target id)
std::vector<FixtureWitness> build_fixtures();
std::vector<PointednessSystem> build_pointedness();
std::vector<MoveDerivation> build_derivations();
std::vector<UnitalDerivation> build_unital();

}  // namespace sftkit::detail
