#pragma once

namespace gridlocus
{
    inline constexpr int default_vertex_cap = 20000;

    /// Vertex cap for full graph construction; GRIDLOCUS_CAP overrides the default.
    [[nodiscard]] auto vertex_cap() -> int;
}
