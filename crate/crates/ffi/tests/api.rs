use std::ffi::{CStr, CString};
use std::ptr;

use lights_out_ffi::*;

fn last_error() -> String {
    let p = lo_last_error_message();
    assert!(!p.is_null());
    unsafe { CStr::from_ptr(p) }.to_string_lossy().into_owned()
}

unsafe fn from_g6(s: &str) -> *mut LoGraph {
    let text = CString::new(s).unwrap();
    let mut g = ptr::null_mut();
    assert_eq!(lo_graph_from_graph6(text.as_ptr(), &mut g), LoStatus::Ok);
    g
}

unsafe fn to_g6(g: *const LoGraph) -> String {
    let mut s = ptr::null_mut();
    assert_eq!(lo_graph_to_graph6(g, &mut s), LoStatus::Ok);
    let out = CStr::from_ptr(s).to_str().unwrap().to_string();
    lo_string_free(s);
    out
}

#[test]
fn build_graph_and_query() {
    unsafe {
        let mut g = ptr::null_mut();
        assert_eq!(lo_graph_new(4, &mut g), LoStatus::Ok);
        for (u, v) in [(1, 2), (2, 3), (3, 4)] {
            assert_eq!(lo_graph_add_edge(g, u, v), LoStatus::Ok);
        }
        assert_eq!(to_g6(g), "Ch");
        let (mut solvable, mut connected, mut edge) = (false, false, false);
        assert_eq!(
            lo_graph_is_universally_solvable(g, &mut solvable),
            LoStatus::Ok
        );
        assert_eq!(lo_graph_is_connected(g, &mut connected), LoStatus::Ok);
        assert_eq!(lo_graph_has_edge(g, 3, 2, &mut edge), LoStatus::Ok);
        assert!(solvable && connected && edge);
        let (mut n, mut m) = (0usize, 0usize);
        lo_graph_vertex_count(g, &mut n);
        lo_graph_edge_count(g, &mut m);
        assert_eq!((n, m), (4, 3));
        lo_graph_free(g);
    }
}

#[test]
fn star_is_not_solvable() {
    unsafe {
        let g = from_g6("Cs");
        let mut edges = 0usize;
        lo_graph_edge_count(g, &mut edges);
        assert_eq!(edges, 3);
        let mut solvable = true;
        lo_graph_is_universally_solvable(g, &mut solvable);
        assert!(!solvable);
        lo_graph_free(g);
    }
}

#[test]
fn solve_k3_and_k4() {
    unsafe {
        let k3 = from_g6("Bw");
        let lit = [1usize, 2, 3];
        let mut presses = [0usize; 3];
        let mut len = 99usize;
        let mut ok = false;
        assert_eq!(
            lo_graph_solve(
                k3,
                lit.as_ptr(),
                lit.len(),
                presses.as_mut_ptr(),
                &mut len,
                &mut ok
            ),
            LoStatus::Ok
        );
        assert!(ok);
        assert_eq!(&presses[..len], &[1]);
        lo_graph_free(k3);

        let k4 = from_g6("C~");
        let lit = [1usize];
        let mut presses = [0usize; 4];
        assert_eq!(
            lo_graph_solve(k4, lit.as_ptr(), 1, presses.as_mut_ptr(), &mut len, &mut ok),
            LoStatus::Ok
        );
        assert!(!ok);
        assert_eq!(len, 0);

        assert_eq!(
            lo_graph_solve(k4, ptr::null(), 0, presses.as_mut_ptr(), &mut len, &mut ok),
            LoStatus::Ok
        );
        assert!(ok);
        assert_eq!(len, 0);
        lo_graph_free(k4);
    }
}

#[test]
fn error_codes_and_messages() {
    unsafe {
        let mut g = ptr::null_mut();
        assert_eq!(lo_graph_new(0, &mut g), LoStatus::InvalidArgument);
        assert!(g.is_null());

        assert_eq!(lo_graph_new(3, &mut g), LoStatus::Ok);
        assert_eq!(lo_graph_add_edge(g, 1, 1), LoStatus::InvalidArgument);
        assert!(last_error().contains("self-loop"));
        assert_eq!(lo_graph_add_edge(g, 0, 2), LoStatus::InvalidArgument);
        assert_eq!(lo_graph_add_edge(g, 1, 4), LoStatus::InvalidArgument);
        assert!(last_error().contains("out of range"));
        lo_graph_free(g);

        let bad = CString::new("C!").unwrap();
        assert_eq!(lo_graph_from_graph6(bad.as_ptr(), &mut g), LoStatus::Parse);
        assert!(last_error().contains("byte 1"));

        assert_eq!(
            lo_graph_from_graph6(ptr::null(), &mut g),
            LoStatus::NullPointer
        );
        let mut b = false;
        assert_eq!(
            lo_graph_is_connected(ptr::null(), &mut b),
            LoStatus::NullPointer
        );

        let mut counts = LoExactCounts::default();
        assert_eq!(lo_exact_counts(9, &mut counts), LoStatus::UnsupportedSize);
    }
}

#[test]
fn gn_strings() {
    unsafe {
        let mut s = ptr::null_mut();
        assert_eq!(lo_gn(11, &mut s), LoStatus::Ok);
        assert_eq!(CStr::from_ptr(s).to_str().unwrap(), "1018997864");
        lo_string_free(s);
        assert_eq!(lo_gn(0, &mut s), LoStatus::InvalidArgument);
    }
}

#[test]
fn exact_counts_n6() {
    let mut c = LoExactCounts::default();
    assert_eq!(unsafe { lo_exact_counts(6, &mut c) }, LoStatus::Ok);
    assert_eq!(
        c,
        LoExactCounts {
            n: 6,
            total: 156,
            solvable: 47,
            connected: 112,
            connected_solvable: 33
        }
    );
}

#[test]
fn estimate_matches_core_and_is_worker_independent() {
    let run = |workers: u32, connected: u8| {
        let req = LoEstimateRequest {
            n: 10,
            trials: 20_000,
            seed: 3,
            connected,
            workers,
        };
        let mut out = LoEstimateResult::default();
        assert_eq!(unsafe { lo_estimate(&req, &mut out) }, LoStatus::Ok);
        out
    };
    let a = run(1, 0);
    let b = run(3, 0);
    assert_eq!(
        (a.solvable_count, a.connected_count),
        (b.solvable_count, b.connected_count)
    );
    let core = lights_out::run_estimate(&lights_out::EstimateRequest {
        n: 10,
        trials: 20_000,
        mode: lights_out::EstimateMode::All,
        seed: 3,
        workers: 1,
    })
    .unwrap();
    assert_eq!(a.solvable_count, core.solvable_count);
    assert_eq!(a.moe95, core.moe95);

    let c = run(0, 1);
    assert_eq!(c.connected_count, u64::MAX);
    assert!(c.p_connected.is_nan());

    let bad = LoEstimateRequest {
        n: 10,
        trials: 0,
        seed: 0,
        connected: 0,
        workers: 1,
    };
    let mut out = LoEstimateResult::default();
    assert_eq!(
        unsafe { lo_estimate(&bad, &mut out) },
        LoStatus::InvalidArgument
    );
}

#[test]
fn sampler_reproduces_cli_stream() {
    unsafe {
        let mut s = ptr::null_mut();
        assert_eq!(lo_sampler_new(7, 42, true, &mut s), LoStatus::Ok);
        let selector = lights_out::sampler::selector_for(7).unwrap();
        for k in 0..50 {
            let mut g = ptr::null_mut();
            assert_eq!(lo_sampler_next(s, &mut g), LoStatus::Ok);
            let mut connected = false;
            lo_graph_is_connected(g, &mut connected);
            assert!(connected);
            let (expected, _) = lights_out::montecarlo::trial_graph(
                &selector,
                lights_out::EstimateMode::Connected,
                42,
                k,
            )
            .unwrap();
            assert_eq!(to_g6(g), lights_out::graph6::write_graph6(&expected));
            lo_graph_free(g);
        }
        lo_sampler_free(s);
        assert_eq!(
            lo_sampler_new(101, 0, false, &mut s),
            LoStatus::UnsupportedSize
        );
    }
}

#[test]
fn free_functions_accept_null() {
    unsafe {
        lo_graph_free(ptr::null_mut());
        lo_sampler_free(ptr::null_mut());
        lo_string_free(ptr::null_mut());
    }
}
