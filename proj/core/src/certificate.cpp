#include <gpramsey/certificate.hpp>
#include <gpramsey/error.hpp>

#include <nlohmann/json.hpp>

#include <fstream>
#include <sstream>

namespace gpramsey {

auto format_witness(const WitnessFile & w) -> std::string
{
    nlohmann::ordered_json header{
        {"family", w.family.name()},
        {"param", w.family.param()},
        {"r", w.coloring.colors()},
        {"k", w.k},
        {"n_points", w.coloring.n_points()},
    };
    return header.dump() + "\n" + w.coloring.to_digits() + "\n";
}

namespace {
    auto strip_cr(std::string_view line) -> std::string_view
    {
        if (! line.empty() && line.back() == '\r')
            line.remove_suffix(1);
        return line;
    }

    auto get_int(const nlohmann::json & header, const char * key) -> int
    {
        auto it = header.find(key);
        if (it == header.end() || ! it->is_number_integer())
            throw ParseError(std::string("witness header: missing or non-integer \"") + key + "\"");
        return it->get<int>();
    }
}

auto parse_witness(std::string_view text) -> WitnessFile
{
    auto newline = text.find('\n');
    std::string_view first = strip_cr(text.substr(0, newline));
    std::string_view rest = newline == std::string_view::npos ? std::string_view{} : text.substr(newline + 1);
    auto second_end = rest.find('\n');
    std::string_view digits = strip_cr(rest.substr(0, second_end));
    if (second_end != std::string_view::npos
        && rest.substr(second_end + 1).find_first_not_of(" \t\r\n") != std::string_view::npos)
        throw ParseError("witness file: unexpected content after the coloring line");

    nlohmann::json header;
    try {
        header = nlohmann::json::parse(first);
    }
    catch (const nlohmann::json::parse_error & e) {
        throw ParseError(std::string("witness header is not valid JSON: ") + e.what());
    }
    if (! header.is_object())
        throw ParseError("witness header must be a JSON object");
    auto fam = header.find("family");
    if (fam == header.end() || ! fam->is_string())
        throw ParseError("witness header: missing \"family\"");

    try {
        auto family = Family::parse(fam->get<std::string>(), get_int(header, "param"));
        int colors = get_int(header, "r");
        int k = get_int(header, "k");
        int n_points = get_int(header, "n_points");
        if (k < 2)
            throw ParseError("witness header: k must be >= 2");
        if (static_cast<int>(digits.size()) != n_points)
            throw ParseError("witness coloring has " + std::to_string(digits.size()) + " digits, header says n_points = "
                + std::to_string(n_points));
        return WitnessFile{family, k, Coloring::from_digits(colors, digits)};
    }
    catch (const InvalidInput & e) {
        throw ParseError(std::string("witness file: ") + e.what());
    }
}

auto write_witness(const std::filesystem::path & path, const WitnessFile & w) -> void
{
    std::ofstream out(path, std::ios::binary);
    if (! out)
        throw Error("cannot open " + path.string() + " for writing");
    out << format_witness(w);
    if (! out)
        throw Error("failed writing " + path.string());
}

auto read_witness(const std::filesystem::path & path) -> WitnessFile
{
    std::ifstream in(path, std::ios::binary);
    if (! in)
        throw ParseError("cannot open witness file " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_witness(buf.str());
}

} // namespace gpramsey
