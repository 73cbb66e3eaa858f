#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace robosim {

// Minimal IEEE 1364 VCD text writer: 1 ns timescale, one flat scope, change
// records emitted only when a value actually changed. Declare signals, call
// write_header() once, then set values and commit(t) per sample point.
class VcdWriter {
public:
    using SignalId = std::size_t;

    explicit VcdWriter(std::ostream& out, std::string scope = "robot");

    SignalId add_wire(const std::string& name);             // 1-bit signal
    SignalId add_bus(const std::string& name, int width);   // vector, z-capable

    // Emits the declaration header. No further signals may be added after.
    void write_header();

    void set_wire(SignalId id, bool value);
    // nullopt drives the whole vector to high impedance.
    void set_bus(SignalId id, std::optional<std::uint32_t> value);

    // Writes "#t" plus the changed signals; the first commit dumps every
    // signal inside a $dumpvars block. Does nothing when no value changed.
    void commit(std::int64_t t_ns);

private:
    struct Signal {
        std::string name;
        int width;
        std::string id;
        std::string current;  // scalar "0"/"1" or MSB-first bit string
        std::string written;  // last value emitted to the stream
    };

    static std::string identifier(std::size_t n);
    void emit(const Signal& s);

    std::ostream& out_;
    std::string scope_;
    std::vector<Signal> signals_;
    bool header_written_ = false;
    bool dumped_ = false;
};

}  // namespace robosim
