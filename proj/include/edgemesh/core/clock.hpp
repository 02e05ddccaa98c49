#pragma once

#include <atomic>
#include <cstdint>

namespace edgemesh::core {

// Time source for daemons and the harness. All timestamps are integer
// milliseconds on the owning clock.
class Clock {
public:
    virtual ~Clock() = default;
    virtual std::int64_t now_ms() const = 0;
};

class WallClock final : public Clock {
public:
    std::int64_t now_ms() const override;
};

// Manually advanced clock; the simulation harness and timing tests own it.
class VirtualClock final : public Clock {
public:
    explicit VirtualClock(std::int64_t start_ms = 0) : now_(start_ms) {}
    std::int64_t now_ms() const override { return now_.load(std::memory_order_relaxed); }
    void advance(std::int64_t delta_ms) { now_.fetch_add(delta_ms, std::memory_order_relaxed); }
    void advance_to(std::int64_t t_ms);

private:
    std::atomic<std::int64_t> now_;
};

}  // namespace edgemesh::core
