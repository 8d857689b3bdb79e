#pragma once

#include <string>
#include <vector>

#include "qtoric/polytope.hpp"

namespace qtoric {

struct Fixture {
    std::string name;
    std::string description;
    std::string specText;
};

const std::vector<Fixture>& builtinFixtures();

// Throws SpecParseError when the name is unknown.
const Fixture& fixtureByName(const std::string& name);
PolytopeSpec fixtureSpec(const std::string& name);

} // namespace qtoric
