#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include <json.hpp>

#include "multigame/game_model.hpp"

namespace multigame {

using Json = nlohmann::ordered_json;

// Exact reading of a JSON scalar: "num/den" or decimal strings, integers, and
// floating literals taken digit-for-digit as printed ("0.3" is 3/10).
Rational rational_from_json(const Json& value, const std::string& path);

// Integers stay JSON integers when they fit in 64 bits; anything else is a "num/den" string.
Json rational_to_json(const Rational& q);

// Always the "num/den" (or "num") string form.
Json rational_to_json_string(const Rational& q);

Multigame game_from_json(const Json& doc);
Multigame parse_game_text(std::string_view text);
Multigame parse_game_file(const std::filesystem::path& path);

Json game_to_json(const Multigame& game);
std::string serialize_game(const Multigame& game);
void write_game_file(const Multigame& game, const std::filesystem::path& path);

}  // namespace multigame
