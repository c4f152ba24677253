#include <gridlocus/caps.hh>

#include <cstdlib>
#include <string>

namespace gridlocus
{
    auto vertex_cap() -> int
    {
        if (const char * env = std::getenv("GRIDLOCUS_CAP")) {
            try {
                int v = std::stoi(env);
                if (v > 0)
                    return v;
            }
            catch (...) {
            }
        }
        return default_vertex_cap;
    }
}
