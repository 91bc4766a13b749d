#include "vmax/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <condition_variable>
#include <cstdlib>
#include <exception>
#include <memory>
#include <mutex>
#include <thread>

namespace vmax {

namespace {

std::atomic<int> g_override{0};

int env_threads() {
    const char* s = std::getenv("VMAX_THREADS");
    if (s && *s) {
        int n = std::atoi(s);
        if (n > 0) return n;
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

class Pool {
public:
    explicit Pool(int n) {
        for (int i = 0; i < n - 1; ++i) workers_.emplace_back([this] { loop(); });
    }
    ~Pool() {
        {
            std::lock_guard<std::mutex> lk(m_);
            stop_ = true;
        }
        cv_.notify_all();
        for (auto& w : workers_) w.join();
    }
    int size() const { return static_cast<int>(workers_.size()) + 1; }

    void run(std::size_t n, const std::function<void(std::size_t)>& body) {
        std::unique_lock<std::mutex> job_lock(job_m_);  // one job at a time
        {
            std::lock_guard<std::mutex> lk(m_);
            body_ = &body;
            n_ = n;
            next_ = 0;
            pending_ = static_cast<int>(workers_.size());
            err_ = nullptr;
            ++gen_;
        }
        cv_.notify_all();
        work();
        std::unique_lock<std::mutex> lk(m_);
        done_cv_.wait(lk, [&] { return pending_ == 0; });
        body_ = nullptr;
        if (err_) std::rethrow_exception(err_);
    }

private:
    void work() {
        for (;;) {
            std::size_t i = next_.fetch_add(1);
            if (i >= n_) break;
            try {
                (*body_)(i);
            } catch (...) {
                std::lock_guard<std::mutex> lk(m_);
                if (!err_) err_ = std::current_exception();
            }
        }
    }
    void loop() {
        std::size_t seen = 0;
        for (;;) {
            {
                std::unique_lock<std::mutex> lk(m_);
                cv_.wait(lk, [&] { return stop_ || gen_ != seen; });
                if (stop_) return;
                seen = gen_;
            }
            work();
            {
                std::lock_guard<std::mutex> lk(m_);
                --pending_;
            }
            done_cv_.notify_one();
        }
    }

    std::vector<std::thread> workers_;
    std::mutex m_, job_m_;
    std::condition_variable cv_, done_cv_;
    const std::function<void(std::size_t)>* body_ = nullptr;
    std::size_t n_ = 0;
    std::atomic<std::size_t> next_{0};
    int pending_ = 0;
    std::size_t gen_ = 0;
    bool stop_ = false;
    std::exception_ptr err_;
};

std::mutex g_pool_m;
std::unique_ptr<Pool> g_pool;
thread_local bool t_inside = false;

}  // namespace

int thread_count() {
    int o = g_override.load();
    return o > 0 ? o : env_threads();
}

void set_thread_count(int n) {
    g_override.store(n);
    std::lock_guard<std::mutex> lk(g_pool_m);
    g_pool.reset();
}

void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body) {
    int nt = thread_count();
    if (nt <= 1 || n < 2 || t_inside) {
        for (std::size_t i = 0; i < n; ++i) body(i);
        return;
    }
    Pool* pool;
    {
        std::lock_guard<std::mutex> lk(g_pool_m);
        if (!g_pool || g_pool->size() != nt) g_pool = std::make_unique<Pool>(nt);
        pool = g_pool.get();
    }
    auto wrapped = [&](std::size_t i) {
        struct Guard {
            bool prev = t_inside;
            Guard() { t_inside = true; }
            ~Guard() { t_inside = prev; }
        } guard;
        body(i);
    };
    pool->run(n, wrapped);
}

}  // namespace vmax
