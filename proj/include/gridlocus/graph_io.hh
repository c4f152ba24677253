#pragma once

#include <gridlocus/graph.hh>

#include <iosfwd>
#include <string>
#include <string_view>

#include <json.hpp>

namespace gridlocus
{
    /// Standard graph6 encoding, without header or trailing newline.
    [[nodiscard]] auto to_graph6(const Graph & g) -> std::string;
    /// Accepts an optional ">>graph6<<" header and trailing whitespace. Throws ParseError.
    [[nodiscard]] auto from_graph6(std::string_view text) -> Graph;

    /// {"n": N, "adjacency": [[...], ...], "labels": [...]} with labels omitted when absent.
    [[nodiscard]] auto to_json(const Graph & g) -> nlohmann::json;
    [[nodiscard]] auto graph_from_json(const nlohmann::json & j) -> Graph;

    /// Reads graph6 or JSON, deciding by the first non-space character.
    [[nodiscard]] auto read_graph_file(const std::string & path) -> Graph;
}
