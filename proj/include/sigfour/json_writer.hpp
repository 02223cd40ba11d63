#ifndef SIGFOUR_JSON_WRITER_HPP
#define SIGFOUR_JSON_WRITER_HPP

#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace sigfour
{

// 17 significant digits ("%.17g"). Non-finite values have no JSON spelling and come back empty.
std::string format_double(double x);

// Minimal streaming JSON emitter. Doubles are written with 17 significant
// digits (lossless), non-finite doubles as null. Output is a single line.
class json_writer
{
public:
    explicit json_writer(std::ostream &os) : m_os(os) {}

    json_writer &begin_object();
    json_writer &end_object();
    json_writer &begin_array();
    json_writer &end_array();
    json_writer &key(std::string_view k);
    json_writer &value(double x);
    json_writer &value(std::string_view s);
    json_writer &value(const char *s)
    {
        return value(std::string_view(s));
    }
    json_writer &value(bool b);
    json_writer &value(std::int64_t n);
    json_writer &value(std::uint64_t n);
    json_writer &null();

private:
    void separate();
    void write_string(std::string_view s);

    std::ostream &m_os;
    // One entry per open container: true until its first element is written.
    std::vector<bool> m_first;
    bool m_after_key = false;
};

}

#endif
