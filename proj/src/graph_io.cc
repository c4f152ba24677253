#include <gridlocus/graph_io.hh>
#include <gridlocus/errors.hh>

#include <fstream>
#include <sstream>

using nlohmann::json;
using std::string;
using std::string_view;
using std::to_string;

namespace gridlocus
{
    auto to_graph6(const Graph & g) -> string
    {
        string out;
        long long n = g.order();
        if (n <= 62)
            out.push_back(static_cast<char>(n + 63));
        else if (n <= 258047) {
            out.push_back(126);
            for (int shift = 12 ; shift >= 0 ; shift -= 6)
                out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
        }
        else {
            out.push_back(126);
            out.push_back(126);
            for (int shift = 30 ; shift >= 0 ; shift -= 6)
                out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
        }

        int acc = 0, bits = 0;
        for (Vertex j = 1 ; j < n ; ++j)
            for (Vertex i = 0 ; i < j ; ++i) {
                acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
                if (++bits == 6) {
                    out.push_back(static_cast<char>(acc + 63));
                    acc = 0;
                    bits = 0;
                }
            }
        if (bits > 0)
            out.push_back(static_cast<char>((acc << (6 - bits)) + 63));
        return out;
    }

    auto from_graph6(string_view text) -> Graph
    {
        constexpr string_view header = ">>graph6<<";
        if (text.substr(0, header.size()) == header)
            text.remove_prefix(header.size());
        while (! text.empty() && (text.back() == '\n' || text.back() == '\r' || text.back() == ' '))
            text.remove_suffix(1);
        if (text.empty())
            throw ParseError("graph6: empty input");

        std::size_t pos = 0;
        auto next6 = [&] () -> long long {
            if (pos >= text.size())
                throw ParseError("graph6: truncated input");
            int c = static_cast<unsigned char>(text[pos++]);
            if (c < 63 || c > 126)
                throw ParseError("graph6: byte " + to_string(c) + " out of range at offset " + to_string(pos - 1));
            return c - 63;
        };

        long long n = next6();
        if (n == 63) {
            if (pos < text.size() && text[pos] == 126) {
                ++pos;
                n = 0;
                for (int i = 0 ; i < 6 ; ++i)
                    n = (n << 6) | next6();
            }
            else {
                n = 0;
                for (int i = 0 ; i < 3 ; ++i)
                    n = (n << 6) | next6();
            }
        }
        if (n > (1 << 24))
            throw ParseError("graph6: order " + to_string(n) + " too large");

        long long pairs = n * (n - 1) / 2;
        std::size_t expected = pos + (pairs + 5) / 6;
        if (text.size() != expected)
            throw ParseError("graph6: expected " + to_string(expected) + " bytes, got " + to_string(text.size()));

        GraphBuilder b(n);
        long long k = 0;
        for (Vertex j = 1 ; j < n ; ++j)
            for (Vertex i = 0 ; i < j ; ++i, ++k) {
                int byte = static_cast<unsigned char>(text[pos + k / 6]) - 63;
                if (byte < 0 || byte > 63)
                    throw ParseError("graph6: byte out of range");
                if ((byte >> (5 - k % 6)) & 1)
                    b.add_edge(i, j);
            }
        if (pairs % 6 != 0) {
            int last = static_cast<unsigned char>(text.back()) - 63;
            if (last < 0 || last > 63 || (last & ((1 << (6 - pairs % 6)) - 1)) != 0)
                throw ParseError("graph6: nonzero padding bits");
        }
        return std::move(b).build();
    }

    auto to_json(const Graph & g) -> json
    {
        json adj = json::array();
        for (Vertex v = 0 ; v < g.order() ; ++v)
            adj.push_back(g.neighbours(v));
        json j{ { "n", g.order() }, { "adjacency", adj } };
        if (! g.labels().empty()) {
            json labels = json::array();
            for (Vertex v = 0 ; v < g.order() ; ++v)
                labels.push_back(g.label(v));
            j["labels"] = labels;
        }
        return j;
    }

    auto graph_from_json(const json & j) -> Graph
    {
        try {
            int n = j.at("n").get<int>();
            const auto & adj = j.at("adjacency");
            if (n < 0 || ! adj.is_array() || static_cast<int>(adj.size()) != n)
                throw ParseError("json graph: adjacency must list " + to_string(n) + " rows");
            GraphBuilder b(n);
            for (int u = 0 ; u < n ; ++u)
                for (const auto & e : adj[u]) {
                    int v = e.get<int>();
                    if (v < 0 || v >= n || v == u)
                        throw ParseError("json graph: bad neighbour " + to_string(v) + " of " + to_string(u));
                    b.add_edge(u, v);
                }
            for (int u = 0 ; u < n ; ++u)
                for (const auto & e : adj[u])
                    if (! b.has_edge(e.get<int>(), u))
                        throw ParseError("json graph: asymmetric adjacency");
            if (j.contains("labels")) {
                const auto & labels = j.at("labels");
                if (static_cast<int>(labels.size()) != n)
                    throw ParseError("json graph: label count mismatch");
                for (int u = 0 ; u < n ; ++u)
                    b.set_label(u, labels[u].get<string>());
            }
            return std::move(b).build();
        }
        catch (const json::exception & e) {
            throw ParseError(string("json graph: ") + e.what());
        }
    }

    auto read_graph_file(const string & path) -> Graph
    {
        std::ifstream in(path, std::ios::binary);
        if (! in)
            throw ParseError("cannot open " + path);
        std::stringstream buffer;
        buffer << in.rdbuf();
        string text = buffer.str();
        auto first = text.find_first_not_of(" \t\r\n");
        if (first == string::npos)
            throw ParseError(path + ": empty file");
        if (text[first] == '{') {
            try {
                return graph_from_json(json::parse(text));
            }
            catch (const json::parse_error & e) {
                throw ParseError(path + ": " + e.what());
            }
        }
        return from_graph6(string_view(text).substr(first));
    }
}
