# Autogenerated by nbdev

d = { 'settings': { 'branch': 'main',
                'doc_baseurl': '/cjm-sign-posets',
                'doc_host': 'https://cj-mills.github.io',
                'git_url': 'https://github.com/cj-mills/cjm-sign-posets',
                'lib_path': 'cjm_sign_posets'},
  'syms': {
            'cjm_sign_posets.analysis.enumeration': {
                'cjm_sign_posets.analysis.enumeration.FlagVector': ('analysis/enumeration.html#flagvector', 'cjm_sign_posets/analysis/enumeration.py'),
                'cjm_sign_posets.analysis.enumeration.IntPolynomial': ('analysis/enumeration.html#intpolynomial', 'cjm_sign_posets/analysis/enumeration.py'),
                'cjm_sign_posets.analysis.enumeration.MaximalChainKey': ('analysis/enumeration.html#maximalchainkey', 'cjm_sign_posets/analysis/enumeration.py'),
                'cjm_sign_posets.analysis.enumeration.flag_f_brute': ('analysis/enumeration.html#flag_f_brute', 'cjm_sign_posets/analysis/enumeration.py'),
                'cjm_sign_posets.analysis.enumeration.flag_f_closed': ('analysis/enumeration.html#flag_f_closed', 'cjm_sign_posets/analysis/enumeration.py'),
                'cjm_sign_posets.analysis.enumeration.flag_f_closed_vector': ('analysis/enumeration.html#flag_f_closed_vector', 'cjm_sign_posets/analysis/enumeration.py'),
                'cjm_sign_posets.analysis.enumeration.flag_h': ('analysis/enumeration.html#flag_h', 'cjm_sign_posets/analysis/enumeration.py'),
                'cjm_sign_posets.analysis.enumeration.flag_f_from_h': ('analysis/enumeration.html#flag_f_from_h', 'cjm_sign_posets/analysis/enumeration.py'),
                'cjm_sign_posets.analysis.enumeration.moebius_invariant': ('analysis/enumeration.html#moebius_invariant', 'cjm_sign_posets/analysis/enumeration.py'),
                'cjm_sign_posets.analysis.enumeration.flag_h_descents': ('analysis/enumeration.html#flag_h_descents', 'cjm_sign_posets/analysis/enumeration.py'),
                'cjm_sign_posets.analysis.enumeration.bounded_flag_f': ('analysis/enumeration.html#bounded_flag_f', 'cjm_sign_posets/analysis/enumeration.py'),
                'cjm_sign_posets.analysis.enumeration.bounded_flag_h': ('analysis/enumeration.html#bounded_flag_h', 'cjm_sign_posets/analysis/enumeration.py'),
                'cjm_sign_posets.analysis.enumeration.fh_from_flag': ('analysis/enumeration.html#fh_from_flag', 'cjm_sign_posets/analysis/enumeration.py'),
                'cjm_sign_posets.analysis.enumeration.max_chain_count': ('analysis/enumeration.html#max_chain_count', 'cjm_sign_posets/analysis/enumeration.py'),
                'cjm_sign_posets.analysis.enumeration.chain_from_key': ('analysis/enumeration.html#chain_from_key', 'cjm_sign_posets/analysis/enumeration.py'),
                'cjm_sign_posets.analysis.enumeration.all_chain_keys': ('analysis/enumeration.html#all_chain_keys', 'cjm_sign_posets/analysis/enumeration.py'),
                'cjm_sign_posets.analysis.enumeration.eulerian': ('analysis/enumeration.html#eulerian', 'cjm_sign_posets/analysis/enumeration.py'),
                'cjm_sign_posets.analysis.enumeration.eulerian_witnesses': ('analysis/enumeration.html#eulerian_witnesses', 'cjm_sign_posets/analysis/enumeration.py'),
                'cjm_sign_posets.analysis.enumeration.eulerian_bijection_check': ('analysis/enumeration.html#eulerian_bijection_check', 'cjm_sign_posets/analysis/enumeration.py'),
                'cjm_sign_posets.analysis.enumeration.surjection_identity': ('analysis/enumeration.html#surjection_identity', 'cjm_sign_posets/analysis/enumeration.py'),
                'cjm_sign_posets.analysis.enumeration.chains_by_interval': ('analysis/enumeration.html#chains_by_interval', 'cjm_sign_posets/analysis/enumeration.py'),
                'cjm_sign_posets.analysis.enumeration.f_d_closed': ('analysis/enumeration.html#f_d_closed', 'cjm_sign_posets/analysis/enumeration.py'),
                'cjm_sign_posets.analysis.enumeration.f_vector_closed': ('analysis/enumeration.html#f_vector_closed', 'cjm_sign_posets/analysis/enumeration.py'),
                'cjm_sign_posets.analysis.enumeration.h_series_closed': ('analysis/enumeration.html#h_series_closed', 'cjm_sign_posets/analysis/enumeration.py'),
                'cjm_sign_posets.analysis.enumeration.VectorTable': ('analysis/enumeration.html#vectortable', 'cjm_sign_posets/analysis/enumeration.py'),
                'cjm_sign_posets.analysis.enumeration.vector_table': ('analysis/enumeration.html#vector_table', 'cjm_sign_posets/analysis/enumeration.py')},
            'cjm_sign_posets.analysis.flows': {
                'cjm_sign_posets.analysis.flows.whitney': ('analysis/flows.html#whitney', 'cjm_sign_posets/analysis/flows.py'),
                'cjm_sign_posets.analysis.flows.is_log_concave': ('analysis/flows.html#is_log_concave', 'cjm_sign_posets/analysis/flows.py'),
                'cjm_sign_posets.analysis.flows.is_unimodal': ('analysis/flows.html#is_unimodal', 'cjm_sign_posets/analysis/flows.py'),
                'cjm_sign_posets.analysis.flows.partial_binomial_sums': ('analysis/flows.html#partial_binomial_sums', 'cjm_sign_posets/analysis/flows.py'),
                'cjm_sign_posets.analysis.flows.RationalFlow': ('analysis/flows.html#rationalflow', 'cjm_sign_posets/analysis/flows.py'),
                'cjm_sign_posets.analysis.flows.flow_R': ('analysis/flows.html#flow_r', 'cjm_sign_posets/analysis/flows.py'),
                'cjm_sign_posets.analysis.flows.flow_P': ('analysis/flows.html#flow_p', 'cjm_sign_posets/analysis/flows.py'),
                'cjm_sign_posets.analysis.flows.constant_flow': ('analysis/flows.html#constant_flow', 'cjm_sign_posets/analysis/flows.py'),
                'cjm_sign_posets.analysis.flows.FlowReport': ('analysis/flows.html#flowreport', 'cjm_sign_posets/analysis/flows.py'),
                'cjm_sign_posets.analysis.flows.verify_flow': ('analysis/flows.html#verify_flow', 'cjm_sign_posets/analysis/flows.py')},
            'cjm_sign_posets.analysis.shelling': {
                'cjm_sign_posets.analysis.shelling.LabelKind': ('analysis/shelling.html#labelkind', 'cjm_sign_posets/analysis/shelling.py'),
                'cjm_sign_posets.analysis.shelling.EdgeLabel': ('analysis/shelling.html#edgelabel', 'cjm_sign_posets/analysis/shelling.py'),
                'cjm_sign_posets.analysis.shelling.label_compare': ('analysis/shelling.html#label_compare', 'cjm_sign_posets/analysis/shelling.py'),
                'cjm_sign_posets.analysis.shelling.label_edge': ('analysis/shelling.html#label_edge', 'cjm_sign_posets/analysis/shelling.py'),
                'cjm_sign_posets.analysis.shelling.LabeledChain': ('analysis/shelling.html#labeledchain', 'cjm_sign_posets/analysis/shelling.py'),
                'cjm_sign_posets.analysis.shelling.descent_set': ('analysis/shelling.html#descent_set', 'cjm_sign_posets/analysis/shelling.py'),
                'cjm_sign_posets.analysis.shelling.label_chain': ('analysis/shelling.html#label_chain', 'cjm_sign_posets/analysis/shelling.py'),
                'cjm_sign_posets.analysis.shelling.bounded_R': ('analysis/shelling.html#bounded_r', 'cjm_sign_posets/analysis/shelling.py'),
                'cjm_sign_posets.analysis.shelling.edge_labels': ('analysis/shelling.html#edge_labels', 'cjm_sign_posets/analysis/shelling.py'),
                'cjm_sign_posets.analysis.shelling.increasing_chain': ('analysis/shelling.html#increasing_chain', 'cjm_sign_posets/analysis/shelling.py'),
                'cjm_sign_posets.analysis.shelling.labeled_maximal_chains': ('analysis/shelling.html#labeled_maximal_chains', 'cjm_sign_posets/analysis/shelling.py'),
                'cjm_sign_posets.analysis.shelling.ELReport': ('analysis/shelling.html#elreport', 'cjm_sign_posets/analysis/shelling.py'),
                'cjm_sign_posets.analysis.shelling.verify_el': ('analysis/shelling.html#verify_el', 'cjm_sign_posets/analysis/shelling.py'),
                'cjm_sign_posets.analysis.shelling.AtomOrderReport': ('analysis/shelling.html#atomorderreport', 'cjm_sign_posets/analysis/shelling.py'),
                'cjm_sign_posets.analysis.shelling.atom_order_report': ('analysis/shelling.html#atom_order_report', 'cjm_sign_posets/analysis/shelling.py'),
                'cjm_sign_posets.analysis.shelling.atom_order_is_lex': ('analysis/shelling.html#atom_order_is_lex', 'cjm_sign_posets/analysis/shelling.py')},
            'cjm_sign_posets.analysis.sperner': {
                'cjm_sign_posets.analysis.sperner.AntichainCertificate': ('analysis/sperner.html#antichaincertificate', 'cjm_sign_posets/analysis/sperner.py'),
                'cjm_sign_posets.analysis.sperner.comparabilities': ('analysis/sperner.html#comparabilities', 'cjm_sign_posets/analysis/sperner.py'),
                'cjm_sign_posets.analysis.sperner.max_antichain': ('analysis/sperner.html#max_antichain', 'cjm_sign_posets/analysis/sperner.py'),
                'cjm_sign_posets.analysis.sperner.max_union_antichains': ('analysis/sperner.html#max_union_antichains', 'cjm_sign_posets/analysis/sperner.py'),
                'cjm_sign_posets.analysis.sperner.greene_kleitman_certificate': ('analysis/sperner.html#greene_kleitman_certificate', 'cjm_sign_posets/analysis/sperner.py'),
                'cjm_sign_posets.analysis.sperner.max_union_antichains_brute': ('analysis/sperner.html#max_union_antichains_brute', 'cjm_sign_posets/analysis/sperner.py'),
                'cjm_sign_posets.analysis.sperner.SpernerReport': ('analysis/sperner.html#spernerreport', 'cjm_sign_posets/analysis/sperner.py'),
                'cjm_sign_posets.analysis.sperner.is_sperner': ('analysis/sperner.html#is_sperner', 'cjm_sign_posets/analysis/sperner.py'),
                'cjm_sign_posets.analysis.sperner.is_strongly_sperner': ('analysis/sperner.html#is_strongly_sperner', 'cjm_sign_posets/analysis/sperner.py'),
                'cjm_sign_posets.analysis.sperner.lym_rank_pair_check': ('analysis/sperner.html#lym_rank_pair_check', 'cjm_sign_posets/analysis/sperner.py'),
                'cjm_sign_posets.analysis.sperner.lym_check': ('analysis/sperner.html#lym_check', 'cjm_sign_posets/analysis/sperner.py'),
                'cjm_sign_posets.analysis.sperner.lym_sum': ('analysis/sperner.html#lym_sum', 'cjm_sign_posets/analysis/sperner.py'),
                'cjm_sign_posets.analysis.sperner.SweepReport': ('analysis/sperner.html#sweepreport', 'cjm_sign_posets/analysis/sperner.py'),
                'cjm_sign_posets.analysis.sperner.sperner_sweep': ('analysis/sperner.html#sperner_sweep', 'cjm_sign_posets/analysis/sperner.py')},
            'cjm_sign_posets.analysis.suite': {
                'cjm_sign_posets.analysis.suite.Check': ('analysis/suite.html#check', 'cjm_sign_posets/analysis/suite.py'),
                'cjm_sign_posets.analysis.suite.CheckResult': ('analysis/suite.html#checkresult', 'cjm_sign_posets/analysis/suite.py'),
                'cjm_sign_posets.analysis.suite.SuiteReport': ('analysis/suite.html#suitereport', 'cjm_sign_posets/analysis/suite.py'),
                'cjm_sign_posets.analysis.suite.CheckSuite': ('analysis/suite.html#checksuite', 'cjm_sign_posets/analysis/suite.py'),
                'cjm_sign_posets.analysis.suite.CheckSuite.check_ids': ('analysis/suite.html#checksuite.check_ids', 'cjm_sign_posets/analysis/suite.py'),
                'cjm_sign_posets.analysis.suite.CheckSuite.get_check': ('analysis/suite.html#checksuite.get_check', 'cjm_sign_posets/analysis/suite.py'),
                'cjm_sign_posets.analysis.suite.CheckSuite.get_next_check_id': ('analysis/suite.html#checksuite.get_next_check_id', 'cjm_sign_posets/analysis/suite.py'),
                'cjm_sign_posets.analysis.suite.CheckSuite.get_previous_check_id': ('analysis/suite.html#checksuite.get_previous_check_id', 'cjm_sign_posets/analysis/suite.py'),
                'cjm_sign_posets.analysis.suite.CheckSuite.run_all': ('analysis/suite.html#checksuite.run_all', 'cjm_sign_posets/analysis/suite.py'),
                'cjm_sign_posets.analysis.suite.CheckSuite.run_check': ('analysis/suite.html#checksuite.run_check', 'cjm_sign_posets/analysis/suite.py'),
                'cjm_sign_posets.analysis.suite.default_suite': ('analysis/suite.html#default_suite', 'cjm_sign_posets/analysis/suite.py')},
            'cjm_sign_posets.cli': {
                'cjm_sign_posets.cli.CommandResult': ('cli.html#commandresult', 'cjm_sign_posets/cli.py'),
                'cjm_sign_posets.cli.parse_command': ('cli.html#parse_command', 'cjm_sign_posets/cli.py'),
                'cjm_sign_posets.cli.execute': ('cli.html#execute', 'cjm_sign_posets/cli.py'),
                'cjm_sign_posets.cli.main': ('cli.html#main', 'cjm_sign_posets/cli.py')},
            'cjm_sign_posets.core.context': {
                'cjm_sign_posets.core.context.RunConfig': ('core/context.html#runconfig', 'cjm_sign_posets/core/context.py')},
            'cjm_sign_posets.core.exports': {
                'cjm_sign_posets.core.exports.OutputFormat': ('core/exports.html#outputformat', 'cjm_sign_posets/core/exports.py'),
                'cjm_sign_posets.core.exports.fraction_str': ('core/exports.html#fraction_str', 'cjm_sign_posets/core/exports.py'),
                'cjm_sign_posets.core.exports.poset_to_dict': ('core/exports.html#poset_to_dict', 'cjm_sign_posets/core/exports.py'),
                'cjm_sign_posets.core.exports.poset_to_json': ('core/exports.html#poset_to_json', 'cjm_sign_posets/core/exports.py'),
                'cjm_sign_posets.core.exports.poset_to_dot': ('core/exports.html#poset_to_dot', 'cjm_sign_posets/core/exports.py'),
                'cjm_sign_posets.core.exports.poset_to_text': ('core/exports.html#poset_to_text', 'cjm_sign_posets/core/exports.py'),
                'cjm_sign_posets.core.exports.poset_to_csv': ('core/exports.html#poset_to_csv', 'cjm_sign_posets/core/exports.py'),
                'cjm_sign_posets.core.exports.render_poset': ('core/exports.html#render_poset', 'cjm_sign_posets/core/exports.py'),
                'cjm_sign_posets.core.exports.rows_to_csv': ('core/exports.html#rows_to_csv', 'cjm_sign_posets/core/exports.py'),
                'cjm_sign_posets.core.exports.rows_to_text': ('core/exports.html#rows_to_text', 'cjm_sign_posets/core/exports.py'),
                'cjm_sign_posets.core.exports.to_json': ('core/exports.html#to_json', 'cjm_sign_posets/core/exports.py')},
            'cjm_sign_posets.core.guards': {
                'cjm_sign_posets.core.guards.GuardExceeded': ('core/guards.html#guardexceeded', 'cjm_sign_posets/core/guards.py'),
                'cjm_sign_posets.core.guards.GuardLimits': ('core/guards.html#guardlimits', 'cjm_sign_posets/core/guards.py'),
                'cjm_sign_posets.core.guards.check_guard': ('core/guards.html#check_guard', 'cjm_sign_posets/core/guards.py')},
            'cjm_sign_posets.core.lattice': {
                'cjm_sign_posets.core.lattice.join': ('core/lattice.html#join', 'cjm_sign_posets/core/lattice.py'),
                'cjm_sign_posets.core.lattice.meet': ('core/lattice.html#meet', 'cjm_sign_posets/core/lattice.py'),
                'cjm_sign_posets.core.lattice.LatticeReport': ('core/lattice.html#latticereport', 'cjm_sign_posets/core/lattice.py'),
                'cjm_sign_posets.core.lattice.lattice_report': ('core/lattice.html#lattice_report', 'cjm_sign_posets/core/lattice.py')},
            'cjm_sign_posets.core.poset': {
                'cjm_sign_posets.core.poset.Family': ('core/poset.html#family', 'cjm_sign_posets/core/poset.py'),
                'cjm_sign_posets.core.poset.Bound': ('core/poset.html#bound', 'cjm_sign_posets/core/poset.py'),
                'cjm_sign_posets.core.poset.CoverType': ('core/poset.html#covertype', 'cjm_sign_posets/core/poset.py'),
                'cjm_sign_posets.core.poset.CoverInfo': ('core/poset.html#coverinfo', 'cjm_sign_posets/core/poset.py'),
                'cjm_sign_posets.core.poset.iter_bits': ('core/poset.html#iter_bits', 'cjm_sign_posets/core/poset.py'),
                'cjm_sign_posets.core.poset.element_label': ('core/poset.html#element_label', 'cjm_sign_posets/core/poset.py'),
                'cjm_sign_posets.core.poset.covers_R': ('core/poset.html#covers_r', 'cjm_sign_posets/core/poset.py'),
                'cjm_sign_posets.core.poset.covers_P': ('core/poset.html#covers_p', 'cjm_sign_posets/core/poset.py'),
                'cjm_sign_posets.core.poset.GradedPoset': ('core/poset.html#gradedposet', 'cjm_sign_posets/core/poset.py'),
                'cjm_sign_posets.core.poset.build_poset': ('core/poset.html#build_poset', 'cjm_sign_posets/core/poset.py'),
                'cjm_sign_posets.core.poset.bounded_extension': ('core/poset.html#bounded_extension', 'cjm_sign_posets/core/poset.py'),
                'cjm_sign_posets.core.poset.leq': ('core/poset.html#leq', 'cjm_sign_posets/core/poset.py')},
            'cjm_sign_posets.core.poset_store': {
                'cjm_sign_posets.core.poset_store.PosetStore': ('core/poset_store.html#posetstore', 'cjm_sign_posets/core/poset_store.py'),
                'cjm_sign_posets.core.poset_store.InMemoryPosetStore': ('core/poset_store.html#inmemoryposetstore', 'cjm_sign_posets/core/poset_store.py'),
                'cjm_sign_posets.core.poset_store.get_or_build': ('core/poset_store.html#get_or_build', 'cjm_sign_posets/core/poset_store.py')},
            'cjm_sign_posets.core.sign_vectors': {
                'cjm_sign_posets.core.sign_vectors.sign_changes': ('core/sign_vectors.html#sign_changes', 'cjm_sign_posets/core/sign_vectors.py'),
                'cjm_sign_posets.core.sign_vectors.SignVector': ('core/sign_vectors.html#signvector', 'cjm_sign_posets/core/sign_vectors.py'),
                'cjm_sign_posets.core.sign_vectors.BlockTuple': ('core/sign_vectors.html#blocktuple', 'cjm_sign_posets/core/sign_vectors.py'),
                'cjm_sign_posets.core.sign_vectors.normalize': ('core/sign_vectors.html#normalize', 'cjm_sign_posets/core/sign_vectors.py'),
                'cjm_sign_posets.core.sign_vectors.to_block_tuple': ('core/sign_vectors.html#to_block_tuple', 'cjm_sign_posets/core/sign_vectors.py'),
                'cjm_sign_posets.core.sign_vectors.from_block_tuple': ('core/sign_vectors.html#from_block_tuple', 'cjm_sign_posets/core/sign_vectors.py'),
                'cjm_sign_posets.core.sign_vectors.canonical_sign_vectors': ('core/sign_vectors.html#canonical_sign_vectors', 'cjm_sign_posets/core/sign_vectors.py')}}}
