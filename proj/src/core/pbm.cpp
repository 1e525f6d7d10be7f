#include "core/pbm.hpp"

#include <string>
#include <vector>

#include "core/errors.hpp"

namespace zimav {

namespace {

constexpr std::size_t kMaxRowWidth = std::size_t(1) << 20;
constexpr std::size_t kMaxCells = std::size_t(1) << 28;
constexpr std::size_t kMaxLineChars = 70;

} // namespace

std::string pbm_encode(const Word& w, std::size_t row_width) {
    if (w.alphabet_size != 2)
        throw domain_error("only binary words can be rendered");
    if (row_width == 0) throw domain_error("row width must be positive");
    if (row_width > kMaxRowWidth) throw size_error("row width too large");

    const std::size_t len = w.letters.size();
    const std::size_t height = len / row_width + (len % row_width != 0);
    const std::size_t pad = height * row_width - len;

    std::string out;
    out.reserve(len + pad + height * (row_width / kMaxLineChars + 1) + 64);
    out += "P1\n";
    if (pad > 0) {
        out += "# pad=";
        out += std::to_string(pad);
        out += '\n';
    }
    out += std::to_string(row_width);
    out += ' ';
    out += std::to_string(height);
    out += '\n';

    // one image row at a time, split so no line exceeds 70 characters
    for (std::size_t r = 0; r < height; ++r) {
        std::size_t emitted = 0;
        for (std::size_t c = 0; c < row_width; ++c) {
            std::size_t i = r * row_width + c;
            out += (i < len && w.letters[i] != 0) ? '1' : '0';
            if (++emitted == kMaxLineChars && c + 1 < row_width) {
                out += '\n';
                emitted = 0;
            }
        }
        out += '\n';
    }
    return out;
}

namespace {

struct PbmReader {
    const std::string& text;
    std::size_t pos = 0;
    std::size_t pad = 0;
    bool saw_pad = false;

    explicit PbmReader(const std::string& t) : text(t) {}

    // whitespace and comment lines; "# pad=N" comments are captured
    void skip_filler() {
        while (pos < text.size()) {
            char c = text[pos];
            if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
                ++pos;
            } else if (c == '#') {
                std::size_t eol = text.find('\n', pos);
                std::string body = text.substr(
                    pos + 1, (eol == std::string::npos ? text.size() : eol) - pos - 1);
                parse_comment(body);
                pos = (eol == std::string::npos) ? text.size() : eol + 1;
            } else {
                return;
            }
        }
    }

    void parse_comment(const std::string& body) {
        std::size_t b = body.find_first_not_of(" \t");
        if (b == std::string::npos) return;
        if (body.compare(b, 4, "pad=") != 0) return;
        if (saw_pad) throw parse_error("duplicate pad comment");
        std::size_t v = b + 4;
        if (v >= body.size()) throw parse_error("empty pad comment");
        std::size_t value = 0;
        for (std::size_t i = v; i < body.size(); ++i) {
            char c = body[i];
            if (c < '0' || c > '9') throw parse_error("malformed pad comment");
            if (value > (kMaxCells - std::size_t(c - '0')) / 10)
                throw parse_error("pad value out of range");
            value = value * 10 + std::size_t(c - '0');
        }
        pad = value;
        saw_pad = true;
    }

    std::size_t read_number(const char* what) {
        skip_filler();
        if (pos >= text.size() || text[pos] < '0' || text[pos] > '9')
            throw parse_error(std::string("expected ") + what);
        std::size_t value = 0;
        while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') {
            std::size_t d = std::size_t(text[pos] - '0');
            if (value > (kMaxCells - d) / 10)
                throw parse_error(std::string(what) + " out of range");
            value = value * 10 + d;
            ++pos;
        }
        return value;
    }
};

} // namespace

Word pbm_decode(const std::string& text) {
    PbmReader rd(text);
    rd.skip_filler();
    if (text.compare(rd.pos, 2, "P1") != 0)
        throw parse_error("not a P1 bitmap");
    rd.pos += 2;

    std::size_t width = rd.read_number("width");
    std::size_t height = rd.read_number("height");
    if (width == 0) throw parse_error("width must be positive");
    if (height > 0 && width > kMaxCells / height)
        throw parse_error("image too large");
    std::size_t cells = width * height;

    std::vector<std::uint8_t> bits;
    bits.reserve(cells);
    while (bits.size() < cells) {
        rd.skip_filler();
        if (rd.pos >= text.size()) throw parse_error("raster ends early");
        char c = text[rd.pos++];
        if (c != '0' && c != '1') throw parse_error("raster holds a non-bit");
        bits.push_back(std::uint8_t(c - '0'));
    }
    rd.skip_filler();
    if (rd.pos != text.size()) throw parse_error("trailing data after raster");

    if (rd.pad >= width && cells > 0)
        throw parse_error("pad exceeds the final row");
    if (rd.pad > cells) throw parse_error("pad exceeds the image");
    for (std::size_t i = cells - rd.pad; i < cells; ++i)
        if (bits[i] != 0) throw parse_error("padding cells must be white");

    bits.resize(cells - rd.pad);
    return make_word(bits, 2);
}

} // namespace zimav
